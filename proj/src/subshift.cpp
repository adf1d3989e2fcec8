#include "shiftlab/subshift.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "shiftlab/errors.hpp"

namespace shiftlab {

// ---------------------------------------------------------------------------
// FactorScanner
// ---------------------------------------------------------------------------

FactorScanner::FactorScanner(const std::vector<Word>& patterns) {
  nodes_.emplace_back();
  for (const Word& p : patterns) {
    int state = 0;
    for (Symbol s : p) {
      int c = child(state, s);
      if (c < 0) {
        c = static_cast<int>(nodes_.size());
        auto& next = nodes_[static_cast<std::size_t>(state)].next;
        next.insert(std::lower_bound(next.begin(), next.end(),
                                     std::pair<Symbol, int>{s, 0}),
                    {s, c});
        nodes_.emplace_back();
      }
      state = c;
    }
    nodes_[static_cast<std::size_t>(state)].terminal = true;
  }
  // Breadth-first failure links; terminal flags propagate along them so a
  // state is terminal iff some pattern ends at it as a suffix.
  std::deque<int> queue;
  for (auto& [s, c] : nodes_[0].next) {
    nodes_[static_cast<std::size_t>(c)].fail = 0;
    queue.push_back(c);
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (auto& [s, c] : nodes_[static_cast<std::size_t>(u)].next) {
      int f = step(nodes_[static_cast<std::size_t>(u)].fail, s);
      nodes_[static_cast<std::size_t>(c)].fail = f;
      nodes_[static_cast<std::size_t>(c)].terminal =
          nodes_[static_cast<std::size_t>(c)].terminal ||
          nodes_[static_cast<std::size_t>(f)].terminal;
      queue.push_back(c);
    }
  }
}

int FactorScanner::child(int state, Symbol s) const {
  const auto& next = nodes_[static_cast<std::size_t>(state)].next;
  auto it = std::lower_bound(next.begin(), next.end(),
                             std::pair<Symbol, int>{s, 0},
                             [](const auto& a, const auto& b) { return a.first < b.first; });
  if (it != next.end() && it->first == s) return it->second;
  return -1;
}

int FactorScanner::step(int state, Symbol s) const {
  while (true) {
    const int c = child(state, s);
    if (c >= 0) return c;
    if (state == 0) return 0;
    state = nodes_[static_cast<std::size_t>(state)].fail;
  }
}

bool FactorScanner::clean(const Word& text) const {
  int state = 0;
  for (Symbol s : text) {
    state = step(state, s);
    if (hit(state)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// WindowGraph
// ---------------------------------------------------------------------------

std::shared_ptr<const WindowGraph> WindowGraph::build(const Subshift& owner,
                                                      std::vector<Symbol> domain,
                                                      std::uint32_t window_len,
                                                      std::size_t max_vertices) {
  // Candidate vertex count |domain|^window_len, with overflow care.
  std::size_t candidates = 1;
  for (std::uint32_t i = 0; i < window_len; ++i) {
    if (domain.empty()) { candidates = 0; break; }
    if (candidates > max_vertices / domain.size() + 1) {
      candidates = max_vertices + 1;
      break;
    }
    candidates *= domain.size();
  }
  if (candidates > max_vertices) return nullptr;

  auto g = std::make_shared<WindowGraph>();
  g->win_ = window_len;
  g->domain_ = std::move(domain);

  // Enumerate locally allowed windows by odometer.
  Word cur(window_len, 0);
  std::vector<std::size_t> digit(window_len, 0);
  std::map<Word, std::uint32_t> index;
  bool done = g->domain_.empty() && window_len > 0;
  while (!done) {
    for (std::uint32_t i = 0; i < window_len; ++i) cur[i] = g->domain_[digit[i]];
    if (owner.locally_allowed(cur)) {
      index.emplace(cur, static_cast<std::uint32_t>(g->vertices_.size()));
      g->vertices_.push_back(cur);
    }
    if (window_len == 0) break;
    std::uint32_t pos = window_len;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < g->domain_.size()) break;
      digit[pos] = 0;
      if (pos == 0) done = true;
    }
  }

  const std::size_t n = g->vertices_.size();
  g->out_.assign(n, {});
  std::vector<std::vector<std::uint32_t>> in(n);
  for (std::uint32_t u = 0; u < n; ++u) {
    Word ext = g->vertices_[u];
    ext.push_back(0);
    for (Symbol s : g->domain_) {
      ext.back() = s;
      if (!owner.locally_allowed(ext)) continue;
      Word tail(ext.begin() + 1, ext.end());
      auto it = index.find(tail);
      if (it == index.end()) continue;
      g->out_[u].push_back(it->second);
      in[it->second].push_back(u);
    }
  }

  // A vertex lies on a cycle iff it can reach itself through >= 1 edge.
  g->on_cycle_.assign(n, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    std::vector<char> seen(n, 0);
    std::deque<std::uint32_t> bfs(g->out_[v].begin(), g->out_[v].end());
    for (std::uint32_t w : g->out_[v]) seen[w] = 1;
    bool found = seen[v] != 0;
    while (!found && !bfs.empty()) {
      const std::uint32_t w = bfs.front();
      bfs.pop_front();
      for (std::uint32_t x : g->out_[w]) {
        if (x == v) { found = true; break; }
        if (!seen[x]) {
          seen[x] = 1;
          bfs.push_back(x);
        }
      }
    }
    g->on_cycle_[v] = found ? 1 : 0;
  }

  auto flood = [n](const std::vector<std::vector<std::uint32_t>>& adj,
                   const std::vector<char>& seed) {
    std::vector<char> mark = seed;
    std::deque<std::uint32_t> bfs;
    for (std::uint32_t v = 0; v < n; ++v)
      if (mark[v]) bfs.push_back(v);
    while (!bfs.empty()) {
      const std::uint32_t v = bfs.front();
      bfs.pop_front();
      for (std::uint32_t w : adj[v])
        if (!mark[w]) {
          mark[w] = 1;
          bfs.push_back(w);
        }
    }
    return mark;
  };
  g->from_cycle_ = flood(g->out_, g->on_cycle_);
  g->to_cycle_ = flood(in, g->on_cycle_);
  return g;
}

std::optional<std::uint32_t> WindowGraph::vertex_index(const Word& w) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), w);
  if (it != vertices_.end() && *it == w)
    return static_cast<std::uint32_t>(it - vertices_.begin());
  return std::nullopt;
}

bool WindowGraph::admits(const Subshift& owner, const Word& w) const {
  if (!owner.locally_allowed(w)) return false;
  if (win_ == 0) {
    // Only single-symbol constraints: any allowed word extends both ways by
    // any allowed symbol, so admissibility needs one cycle (= one allowed
    // symbol) to exist.
    return !on_cycle_.empty() && on_cycle_[0] != 0;
  }
  if (w.size() >= win_) {
    const auto first = vertex_index(Word(w.begin(), w.begin() + win_));
    const auto last = vertex_index(Word(w.end() - win_, w.end()));
    if (!first || !last) return false;
    return from_cycle_[*first] != 0 && to_cycle_[*last] != 0;
  }
  // Short word: it must embed into some bi-extendable window.
  for (std::uint32_t v = 0; v < vertices_.size(); ++v) {
    if (!from_cycle_[v] || !to_cycle_[v]) continue;
    if (contains_factor(vertices_[v], w)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Subshift
// ---------------------------------------------------------------------------

namespace {
constexpr std::size_t kMaxWindowVertices = 300000;
}

Subshift Subshift::validate(BasisSpec spec) {
  Subshift out;
  if (auto* ex = std::get_if<ExplicitBasis>(&spec)) {
    for (const Word& w : ex->words)
      if (w.empty()) throw SpecError("empty word in forbidden basis");
    std::sort(ex->words.begin(), ex->words.end());
    ex->words.erase(std::unique(ex->words.begin(), ex->words.end()), ex->words.end());
    if (ex->alphabet) {
      if (ex->alphabet->empty())
        throw SpecError("declared alphabet must be nonempty");
      std::sort(ex->alphabet->begin(), ex->alphabet->end());
      ex->alphabet->erase(std::unique(ex->alphabet->begin(), ex->alphabet->end()),
                          ex->alphabet->end());
    }
    for (const Word& w : ex->words) {
      out.max_len_ = std::max<std::uint32_t>(out.max_len_,
                                             static_cast<std::uint32_t>(w.size()));
      out.active_.insert(out.active_.end(), w.begin(), w.end());
    }
    std::sort(out.active_.begin(), out.active_.end());
    out.active_.erase(std::unique(out.active_.begin(), out.active_.end()),
                      out.active_.end());
    out.is_sft_ = true;
    out.is_sbt_ = true;
    out.scanner_ = std::make_shared<const FactorScanner>(ex->words);
    if (ex->alphabet) {
      out.domain_ = *ex->alphabet;
    } else {
      // One representative stands in for every symbol outside the basis
      // words; all such symbols behave identically under an explicit basis.
      out.domain_ = out.active_;
      const Symbol rep = out.active_.empty() ? 0 : out.active_.back() + 1;
      out.class_rep_ = rep;
      out.domain_.push_back(rep);
    }
  } else {
    auto& rule = std::get<RuleBasis>(spec);
    if (rule.max_len == 0) throw SpecError("rule basis with max_len = 0");
    if (rule.max_len != 2)
      throw SpecError("the monotone rule is a length-2 predicate; max_len must be 2");
    if (rule.alphabet_bound == 0)
      throw SpecError("rule basis needs a positive alphabet bound");
    out.max_len_ = rule.max_len;
    out.is_sft_ = false;
    out.is_sbt_ = true;
    out.domain_.reserve(rule.alphabet_bound);
    for (Symbol s = 0; s < rule.alphabet_bound; ++s) out.domain_.push_back(s);
  }
  out.spec_ = std::move(spec);
  const std::uint32_t win = out.max_len_ > 0 ? out.max_len_ - 1 : 0;
  out.graph_ = WindowGraph::build(out, out.domain_, win, kMaxWindowVertices);
  return out;
}

const ExplicitBasis* Subshift::explicit_basis() const {
  return std::get_if<ExplicitBasis>(&spec_);
}

const RuleBasis* Subshift::rule_basis() const {
  return std::get_if<RuleBasis>(&spec_);
}

bool Subshift::unrestricted_sft() const {
  const auto* ex = explicit_basis();
  return ex != nullptr && !ex->alphabet;
}

bool Subshift::rule_matches(const Word& w) const {
  const auto* rule = rule_basis();
  if (!rule || w.size() != 2) return false;
  return rule->direction == MonotoneDirection::non_increasing ? w[0] < w[1]
                                                              : w[0] > w[1];
}

bool Subshift::locally_allowed(const Word& w) const {
  if (explicit_basis() != nullptr) return scanner_->clean(w);
  const auto* rule = rule_basis();
  for (std::size_t len = 1; len <= std::min<std::size_t>(rule->max_len, w.size()); ++len)
    for (std::size_t i = 0; i + len <= w.size(); ++i)
      if (rule_matches(Word(w.begin() + static_cast<std::ptrdiff_t>(i),
                            w.begin() + static_cast<std::ptrdiff_t>(i + len))))
        return false;
  return true;
}

GlobalAnswer Subshift::globally_allowed(const Word& w) const {
  if (const auto* ex = explicit_basis()) {
    if (!ex->alphabet) {
      // Unrestricted alphabet: any locally allowed word extends to a point by
      // appending a symbol absent from every basis word, then anything.
      return {locally_allowed(w), true};
    }
    for (Symbol s : w)
      if (!std::binary_search(ex->alphabet->begin(), ex->alphabet->end(), s))
        return {false, true};
    return {graph_allows(w), true};
  }
  const auto* rule = rule_basis();
  for (Symbol s : w)
    if (s >= rule->alphabet_bound) return {locally_allowed(w), false};
  return {graph_allows(w), false};
}

bool Subshift::graph_allows(const Word& w) const {
  if (!graph_)
    throw SpecError("window graph exceeds the configured size bound for this basis");
  if (class_rep_) {
    Word mapped = w;
    for (Symbol& s : mapped)
      if (!std::binary_search(active_.begin(), active_.end(), s)) s = *class_rep_;
    return graph_->admits(*this, mapped);
  }
  for (Symbol s : w)
    if (!std::binary_search(domain_.begin(), domain_.end(), s)) return false;
  return graph_->admits(*this, w);
}

std::uint32_t Subshift::gluing_bound() const {
  if (!is_sbt_) throw PreconditionError("gluing bound needs a bounded basis");
  return max_len_ > 0 ? max_len_ - 1 : 0;
}

bool Subshift::verify_gluing(const Word& u, const Word& w, const Word& v) const {
  if (w.size() < gluing_bound())
    throw PreconditionError("gluing overlap shorter than the gluing bound");
  const Word uw = concat_words(u, w);
  const Word wv = concat_words(w, v);
  if (!globally_allowed(uw).value || !globally_allowed(wv).value) return true;
  return globally_allowed(concat_words(uw, v)).value;
}

std::vector<Symbol> Subshift::fresh_symbols(std::size_t count,
                                            const std::vector<Symbol>& avoid) const {
  if (!unrestricted_sft())
    throw PreconditionError(
        "fresh symbols exist only for explicit bases over the unrestricted alphabet");
  std::int64_t base = -1;
  for (Symbol s : active_) base = std::max<std::int64_t>(base, s);
  for (Symbol s : avoid) base = std::max<std::int64_t>(base, s);
  std::vector<Symbol> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(static_cast<Symbol>(base + 1 + static_cast<std::int64_t>(i)));
  return out;
}

MembershipResult Subshift::contains(const Point& x, std::uint64_t horizon) const {
  if (horizon < max_len_)
    throw PreconditionError("membership horizon below the max basis length");
  std::uint64_t scan = horizon;
  bool exact = false;
  if (x.is_eventually_periodic()) {
    const std::uint64_t bound = x.ep_scan_bound(max_len_);
    if (horizon >= bound) {
      scan = bound;
      exact = true;
    }
  }

  if (const auto* ex = explicit_basis()) {
    int state = scanner_->root();
    for (std::uint64_t i = 0; i < scan; ++i) {
      const Symbol s = x.at(i);
      if (ex->alphabet &&
          !std::binary_search(ex->alphabet->begin(), ex->alphabet->end(), s))
        return {false, true, i};
      state = scanner_->step(state, s);
      if (scanner_->hit(state)) return {false, true, i};
    }
  } else {
    const auto* rule = rule_basis();
    Word window;
    for (std::uint64_t i = 0; i < scan; ++i) {
      window.push_back(x.at(i));
      if (window.size() > rule->max_len) window.erase(window.begin());
      for (std::size_t len = 1; len <= window.size(); ++len)
        if (rule_matches(Word(window.end() - static_cast<std::ptrdiff_t>(len),
                              window.end())))
          return {false, true, i};
    }
  }

  // Declared-alphabet and rule bases additionally need the head window to be
  // reachable from a recurrent state (arbitrary back-extension).
  if (!unrestricted_sft() && max_len_ >= 1 && graph_) {
    const std::uint32_t win = max_len_ - 1;
    if (win >= 1) {
      const Word head = point_slice(x, 0, win);
      bool in_domain = true;
      for (Symbol s : head)
        if (!std::binary_search(domain_.begin(), domain_.end(), s)) in_domain = false;
      if (in_domain && !graph_allows(head)) return {false, exact, 0};
    }
  }
  return {true, exact, 0};
}

}  // namespace shiftlab
