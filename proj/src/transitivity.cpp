#include "shiftlab/transitivity.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>

#include "shiftlab/errors.hpp"
#include "shiftlab/shadowing.hpp"

namespace shiftlab {

// ---------------------------------------------------------------------------
// SetPresentation
// ---------------------------------------------------------------------------

SetPresentation SetPresentation::finite(std::vector<Point> points) {
  SetPresentation out;
  out.kind_ = SetKind::finite_ep;
  for (const Point& p : points)
    if (!p.is_eventually_periodic())
      throw SpecError("finite presentations hold eventually periodic points only");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (ep_equal(points[i], points[j]))
        throw SpecError("duplicate point in finite presentation");
  out.points_ = std::move(points);
  return out;
}

SetPresentation SetPresentation::remark2_family() {
  SetPresentation out;
  out.kind_ = SetKind::remark2_family;
  return out;
}

SetPresentation SetPresentation::prefix_oracle(
    std::function<std::set<Word>(std::uint32_t)> oracle) {
  SetPresentation out;
  out.kind_ = SetKind::prefix_oracle;
  out.oracle_ = std::move(oracle);
  return out;
}

const std::vector<Point>& SetPresentation::points() const {
  if (kind_ != SetKind::finite_ep)
    throw PreconditionError("points() needs a finite presentation");
  return points_;
}

std::set<Word> SetPresentation::oracle_prefixes(std::uint32_t depth) const {
  if (kind_ != SetKind::prefix_oracle)
    throw PreconditionError("oracle_prefixes() needs a prefix oracle");
  return oracle_(depth);
}

// ---------------------------------------------------------------------------
// Chains
// ---------------------------------------------------------------------------

namespace {

// Exact step defects within a finite presentation.
std::vector<std::vector<Dyadic>> defect_matrix(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<Dyadic>> m(n, std::vector<Dyadic>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const Point img = pts[i].shifted(1);
    for (std::size_t j = 0; j < n; ++j) m[i][j] = distance(img, pts[j], 1).value;
  }
  return m;
}

std::size_t locate(const std::vector<Point>& pts, const Point& p, const char* role) {
  if (!p.is_eventually_periodic())
    throw PreconditionError("chain endpoints must be eventually periodic");
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (ep_equal(pts[i], p)) return i;
  throw PreconditionError(std::string(role) + " endpoint is not a member of the set");
}

// Shortest path from..to under `edge` as vertex indices (empty = none within
// max_entries vertices).  With at_least_one_edge the trivial one-entry answer
// for from == to is disallowed.  Deterministic: neighbors expand in index
// order.
std::vector<std::size_t> bfs_path(std::size_t n, std::size_t from, std::size_t to,
                                  const std::function<bool(std::size_t, std::size_t)>& edge,
                                  std::size_t max_entries, bool at_least_one_edge) {
  if (from == to && !at_least_one_edge)
    return max_entries >= 1 ? std::vector<std::size_t>{from} : std::vector<std::size_t>{};
  if (max_entries < 2) return {};
  constexpr std::size_t kNone = ~std::size_t{0};
  std::vector<std::size_t> parent(n, kNone);
  std::vector<std::size_t> depth(n, kNone);
  std::deque<std::size_t> queue;
  // Parent chains terminate at `from`, whose parent stays kNone, so the
  // rebuilt path already starts with `from`.
  auto reconstruct = [&](std::size_t before_to) {
    std::vector<std::size_t> path = {to};
    for (std::size_t c = before_to; c != kNone; c = parent[c]) path.push_back(c);
    std::reverse(path.begin(), path.end());
    return path;
  };
  // `from` keeps parent kNone and is never enqueued; `to` is never enqueued.
  for (std::size_t s = 0; s < n; ++s) {
    if (!edge(from, s)) continue;
    if (s == to) return {from, to};
    if (depth[s] == kNone && s != from) {
      depth[s] = 1;
      parent[s] = from;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (depth[v] + 2 > max_entries) continue;  // any extension exceeds the cap
    for (std::size_t w = 0; w < n; ++w) {
      if (!edge(v, w)) continue;
      if (w == to) return reconstruct(v);
      if (depth[w] == kNone && w != from) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::optional<DeltaChain> chain_from_path(const std::vector<Point>& pts,
                                          const std::vector<std::size_t>& path,
                                          Dyadic delta) {
  if (path.empty()) return std::nullopt;
  DeltaChain out;
  out.delta = delta;
  out.entries.reserve(path.size());
  for (std::size_t idx : path) out.entries.push_back(pts[idx]);
  return out;
}

}  // namespace

std::optional<DeltaChain> find_delta_chain(const SetPresentation& Z, const Point& a,
                                           const Point& b, Dyadic delta,
                                           std::size_t max_len) {
  const auto& pts = Z.points();
  const std::size_t ia = locate(pts, a, "start");
  const std::size_t ib = locate(pts, b, "target");
  if (ia == ib) return DeltaChain{{pts[ia]}, delta};
  const auto m = defect_matrix(pts);
  auto edge = [&](std::size_t i, std::size_t j) { return m[i][j] < delta; };
  return chain_from_path(pts, bfs_path(pts.size(), ia, ib, edge, max_len, false), delta);
}

std::optional<DeltaChain> find_return_chain(const SetPresentation& Z, const Point& a,
                                            Dyadic delta, std::size_t max_len) {
  const auto& pts = Z.points();
  const std::size_t ia = locate(pts, a, "start");
  const auto m = defect_matrix(pts);
  auto edge = [&](std::size_t i, std::size_t j) { return m[i][j] < delta; };
  return chain_from_path(pts, bfs_path(pts.size(), ia, ia, edge, max_len, true), delta);
}

bool is_ict(const SetPresentation& Z, Dyadic delta, std::size_t max_len) {
  const auto& pts = Z.points();
  const std::size_t n = pts.size();
  const auto m = defect_matrix(pts);
  auto edge = [&](std::size_t i, std::size_t j) { return m[i][j] < delta; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;  // the trivial one-entry chain answers a -> a
      if (bfs_path(n, i, j, edge, max_len, false).empty()) return false;
    }
  return true;
}

bool ict_certified(const SetPresentation& Z) {
  const auto& pts = Z.points();
  const std::size_t n = pts.size();
  if (n == 0) return true;
  const auto m = defect_matrix(pts);
  auto edge = [&](std::size_t i, std::size_t j) { return m[i][j].is_zero(); };
  if (n == 1) return edge(0, 0);  // singleton: must be a fixed point
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (bfs_path(n, i, j, edge, n + 1, false).empty()) return false;
    }
  return true;
}

bool check_closed_invariant(const SetPresentation& Z) {
  const auto& pts = Z.points();
  std::vector<Point> image;
  image.reserve(pts.size());
  for (const Point& p : pts) image.push_back(p.shifted(1));
  auto canon = [](std::vector<Point> v) {
    std::sort(v.begin(), v.end(), ep_less);
    v.erase(std::unique(v.begin(), v.end(),
                        [](const Point& a, const Point& b) { return ep_equal(a, b); }),
            v.end());
    return v;
  };
  const auto lhs = canon(image);
  const auto rhs = canon(pts);
  if (lhs.size() != rhs.size()) return false;
  for (std::size_t i = 0; i < lhs.size(); ++i)
    if (!ep_equal(lhs[i], rhs[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// IctChainStream
// ---------------------------------------------------------------------------

struct IctChainStream::Impl {
  std::vector<Point> pts;
  std::vector<std::vector<Dyadic>> defects;
  std::uint32_t saturation = 0;  // rung past which only zero-defect steps remain

  mutable std::mutex mu;
  mutable std::vector<std::uint32_t> entries;     // point indices
  mutable std::vector<std::uint64_t> leg_starts;  // first entry index appended by leg n
  mutable std::map<std::uint32_t, std::vector<std::vector<char>>> adj_cache;

  const std::vector<std::vector<char>>& adjacency(std::uint32_t rung) const {
    auto it = adj_cache.find(rung);
    if (it != adj_cache.end()) return it->second;
    const std::size_t n = pts.size();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    const Dyadic bound = Dyadic::pow2_neg(rung);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adj[i][j] = defects[i][j] < bound ? 1 : 0;
    return adj_cache.emplace(rung, std::move(adj)).first->second;
  }

  void append_leg(std::size_t leg) const {
    const std::size_t n = pts.size();
    const std::size_t from = leg % n;
    const std::size_t to = (leg + 1) % n;
    const std::uint32_t rung =
        static_cast<std::uint32_t>(std::min<std::size_t>(leg, saturation));
    const auto& adj = adjacency(rung);
    auto edge = [&](std::size_t i, std::size_t j) { return adj[i][j] != 0; };
    const auto path = bfs_path(n, from, to, edge, n + 1, false);
    if (path.empty())
      throw PreconditionError("no chain at rung 2^-" + std::to_string(rung) +
                              " between presented points " + std::to_string(from) +
                              " and " + std::to_string(to));
    leg_starts.push_back(entries.size());
    for (std::size_t k = 1; k < path.size(); ++k)
      entries.push_back(static_cast<std::uint32_t>(path[k]));
  }

  void ensure_entries(std::uint64_t upto) const {
    while (entries.size() <= upto) append_leg(leg_starts.size());
  }

  void ensure_legs(std::size_t count) const {
    while (leg_starts.size() < count) append_leg(leg_starts.size());
  }
};

IctChainStream::IctChainStream(std::vector<Point> points, std::vector<Dyadic> ladder)
    : points_(points), ladder_(std::move(ladder)) {
  if (points.empty()) throw PreconditionError("chain stream needs a nonempty set");
  impl_ = std::make_shared<Impl>();
  impl_->pts = std::move(points);
  impl_->defects = defect_matrix(impl_->pts);
  for (const auto& row : impl_->defects)
    for (Dyadic d : row)
      if (!d.is_zero())
        impl_->saturation = std::max(impl_->saturation, d.neg_exponent());
  impl_->entries.push_back(0);
}

Point IctChainStream::at(std::uint64_t i) const {
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (impl_->pts.size() == 1) return impl_->pts[0];
  impl_->ensure_entries(i);
  return impl_->pts[impl_->entries[static_cast<std::size_t>(i)]];
}

std::uint64_t IctChainStream::rate(std::uint32_t m) const {
  if (m == 0) return 0;
  std::lock_guard<std::mutex> lock(impl_->mu);
  if (impl_->pts.size() == 1) return 0;
  // Steps appended by leg n carry defect < 2^(-n), i.e. lcp >= n+1, so only
  // steps before leg m-1 can disagree earlier than m; scan those exactly.
  const std::size_t guard_leg = m - 1;
  impl_->ensure_legs(guard_leg + 1);
  const std::uint64_t scan = impl_->leg_starts[guard_leg];
  impl_->ensure_entries(scan);
  std::uint64_t r = 0;
  for (std::uint64_t k = 0; k + 1 <= scan; ++k) {
    const Dyadic d = impl_->defects[impl_->entries[static_cast<std::size_t>(k)]]
                                   [impl_->entries[static_cast<std::size_t>(k + 1)]];
    if (!d.is_zero() && d.neg_exponent() < m) r = k + 1;
  }
  return r;
}

std::shared_ptr<const AsymptoticPseudoOrbit> ict_to_apo(
    const SetPresentation& Z, const std::vector<Dyadic>& ladder) {
  const auto& pts = Z.points();
  if (pts.empty()) throw PreconditionError("cannot build a stream over the empty set");
  const std::size_t max_len = pts.size() + 1;
  for (Dyadic rung : ladder)
    if (!is_ict(Z, rung, max_len))
      throw PreconditionError("set is not chain transitive at rung " + rung.str());
  if (!ict_certified(Z))
    throw PreconditionError(
        "chain tightness cannot vanish: zero-defect steps do not connect the set");
  return std::make_shared<IctChainStream>(pts, ladder);
}

// ---------------------------------------------------------------------------
// Realizations
// ---------------------------------------------------------------------------

namespace {
std::vector<Dyadic> default_ladder() {
  std::vector<Dyadic> out;
  for (std::uint32_t m = 0; m <= 6; ++m) out.push_back(Dyadic::pow2_neg(m));
  return out;
}
}  // namespace

Point realize_ict(const Subshift& shift, const SetPresentation& Z,
                  std::uint64_t horizon) {
  if (!shift.is_sbt()) throw PreconditionError("realization needs a bounded basis");
  const std::uint64_t h = std::max<std::uint64_t>(horizon, shift.max_basis_length());
  for (const Point& p : Z.points())
    if (!shift.contains(p, h).value)
      throw PreconditionError("presented point outside the subshift: " + format_point(p));
  auto apo = ict_to_apo(Z, default_ladder());
  return synthesize_asymptotic_shadow(shift, apo, horizon);
}

DeltaChain sft_connecting_chain(const Subshift& shift, const Point& x, const Point& y,
                                Dyadic delta, std::uint64_t horizon) {
  if (!shift.unrestricted_sft())
    throw PreconditionError(
        "connecting chains need an explicit basis over the unrestricted alphabet");
  if (delta.is_zero()) throw PreconditionError("connecting chain needs delta > 0");
  const std::uint32_t L = shift.max_basis_length();
  const std::uint64_t h = std::max<std::uint64_t>(horizon, L);
  if (!shift.contains(x, h).value || !shift.contains(y, h).value)
    throw PreconditionError("chain endpoints must lie in the subshift");

  // 2^(-N) < delta forces N = e+1; the first link then has lcp >= N.
  const std::uint64_t N = delta.neg_exponent() + 1;

  std::vector<Symbol> avoid;
  {
    const Word vx = point_slice(x, 0, N + 1);
    avoid.insert(avoid.end(), vx.begin(), vx.end());
    const Word vy = x.is_eventually_periodic() && y.is_eventually_periodic()
                        ? Word{}
                        : point_slice(y, 0, N + L + 8);
    avoid.insert(avoid.end(), vy.begin(), vy.end());
    if (y.is_eventually_periodic()) {
      const auto sy = y.ep_symbols();
      avoid.insert(avoid.end(), sy.begin(), sy.end());
    }
    if (x.is_eventually_periodic()) {
      const auto sx = x.ep_symbols();
      avoid.insert(avoid.end(), sx.begin(), sx.end());
    }
  }
  const Symbol c = shift.fresh_symbols(1, avoid)[0];

  Word head = point_slice(x, 1, N + 1);
  head.push_back(c);
  const Point z = Point::concat(std::move(head), y);

  DeltaChain chain;
  chain.delta = delta;
  chain.entries.push_back(x);
  for (std::uint64_t j = 0; j <= N + 1; ++j) chain.entries.push_back(z.shifted(j));
  for (const Point& p : chain.entries)
    if (!shift.contains(p, h).value)
      throw std::logic_error("connecting chain entry left the subshift");
  if (!agree_on_prefix(x.shifted(1), z, delta.neg_exponent() + 1))
    throw std::logic_error("connecting chain first link misses its bound");
  return chain;
}

Point realize_invariant_sft(const Subshift& shift, const SetPresentation& Z,
                            std::uint64_t horizon) {
  if (!shift.unrestricted_sft())
    throw PreconditionError(
        "invariant-set realization needs an explicit basis over the unrestricted alphabet");
  const auto& pts = Z.points();
  if (pts.empty()) throw PreconditionError("cannot realize the empty set");
  if (!check_closed_invariant(Z))
    throw PreconditionError("presented set is not shift-invariant");
  const std::uint64_t h = std::max<std::uint64_t>(horizon, shift.max_basis_length());
  for (const Point& p : pts)
    if (!shift.contains(p, h).value)
      throw PreconditionError("presented point outside the subshift: " + format_point(p));

  std::vector<Symbol> avoid;
  for (const Point& p : pts) {
    const auto s = p.ep_symbols();
    avoid.insert(avoid.end(), s.begin(), s.end());
  }
  const Symbol sep_start = shift.fresh_symbols(1, avoid)[0];
  Point x = Point::interleave(pts, sep_start);
  if (!shift.contains(x, h).value)
    throw std::logic_error("interleaving realization left the subshift");
  return x;
}

}  // namespace shiftlab
