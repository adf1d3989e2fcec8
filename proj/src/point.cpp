#include "shiftlab/point.hpp"

#include <algorithm>
#include <numeric>

#include "shiftlab/errors.hpp"
#include "shiftlab/stream.hpp"

namespace shiftlab {

namespace {

// Smallest d dividing |w| with w equal to its length-d prefix repeated.
std::size_t primitive_root_length(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return d;
  }
  return n;
}

}  // namespace

Point Point::eventually_periodic(Word pre, Word per) {
  if (per.empty()) throw SpecError("eventually periodic point needs a nonempty period");
  per.resize(primitive_root_length(per));
  // Absorb trailing preperiod symbols that already match the cycle: u.a with
  // a equal to the last period symbol rotates the period instead.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.begin(), per.end() - 1, per.end());
  }
  return Point(Ep{std::move(pre), std::move(per)});
}

Point Point::remark1() {
  class Remark1Scheme final : public SchemeBase {
   public:
    // Block k >= 1 repeats symbol (k odd ? 0 : 1) k times and closes with the
    // one-off separator k+1; S(k) = k(k+3)/2 positions are consumed through
    // block k.
    Symbol at(std::uint64_t i) const override {
      std::uint64_t lo = 1, hi = 3;
      while (total(hi) <= i) hi *= 2;
      while (lo < hi) {  // smallest k with i < S(k)
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (total(mid) > i) hi = mid; else lo = mid + 1;
      }
      const std::uint64_t k = lo;
      const std::uint64_t off = i - total(k - 1);
      if (off < k) return (k % 2 == 1) ? 0 : 1;
      return static_cast<Symbol>(k + 1);
    }
    SchemeKind kind() const override { return SchemeKind::remark1; }

   private:
    static std::uint64_t total(std::uint64_t k) { return k * (k + 3) / 2; }
  };
  static const auto scheme = std::make_shared<const Remark1Scheme>();
  return Point(scheme);
}

Point Point::remark2() {
  class Remark2Scheme final : public SchemeBase {
   public:
    // Group k >= 1 is 0^k 1^k followed by the separator k+1; G(k) = k(k+2)
    // positions are consumed through group k.
    Symbol at(std::uint64_t i) const override {
      std::uint64_t lo = 1, hi = 3;
      while (total(hi) <= i) hi *= 2;
      while (lo < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        if (total(mid) > i) hi = mid; else lo = mid + 1;
      }
      const std::uint64_t k = lo;
      const std::uint64_t off = i - total(k - 1);
      if (off < k) return 0;
      if (off < 2 * k) return 1;
      return static_cast<Symbol>(k + 1);
    }
    SchemeKind kind() const override { return SchemeKind::remark2; }

   private:
    static std::uint64_t total(std::uint64_t k) { return k * (k + 2); }
  };
  static const auto scheme = std::make_shared<const Remark2Scheme>();
  return Point(scheme);
}

Point Point::concat(Word head, Point tail) {
  if (head.empty()) return tail;
  if (tail.is_eventually_periodic()) {
    Word pre = head;
    const Word& tpre = tail.preperiod();
    pre.insert(pre.end(), tpre.begin(), tpre.end());
    return eventually_periodic(std::move(pre), tail.period());
  }
  if (const auto* c = dynamic_cast<const ConcatScheme*>(&tail.scheme())) {
    Word merged = head;
    merged.insert(merged.end(), c->head().begin(), c->head().end());
    return Point(std::make_shared<const ConcatScheme>(std::move(merged), c->tail()));
  }
  return Point(std::make_shared<const ConcatScheme>(std::move(head), std::move(tail)));
}

Point Point::interleave(std::vector<Point> points, Symbol separator_start) {
  return Point(std::make_shared<const InterleaveScheme>(std::move(points),
                                                        separator_start));
}

Point Point::from_scheme(std::shared_ptr<const SchemeBase> scheme) {
  if (!scheme) throw SpecError("null scheme");
  return Point(std::move(scheme));
}

const Word& Point::preperiod() const {
  if (!is_eventually_periodic())
    throw PreconditionError("preperiod() on a scheme-backed point");
  return std::get<Ep>(rep_).pre;
}

const Word& Point::period() const {
  if (!is_eventually_periodic())
    throw PreconditionError("period() on a scheme-backed point");
  return std::get<Ep>(rep_).per;
}

Symbol Point::at(std::uint64_t i) const {
  if (is_eventually_periodic()) {
    const Ep& ep = std::get<Ep>(rep_);
    if (i < ep.pre.size()) return ep.pre[i];
    return ep.per[(i - ep.pre.size()) % ep.per.size()];
  }
  return std::get<std::shared_ptr<const SchemeBase>>(rep_)->at(i);
}

Point Point::shifted(std::uint64_t n) const {
  if (n == 0) return *this;
  if (is_eventually_periodic()) {
    const Ep& ep = std::get<Ep>(rep_);
    if (n < ep.pre.size())
      return eventually_periodic(Word(ep.pre.begin() + static_cast<std::ptrdiff_t>(n),
                                      ep.pre.end()),
                                 ep.per);
    const std::size_t r = (n - ep.pre.size()) % ep.per.size();
    Word per = ep.per;
    std::rotate(per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
    return eventually_periodic({}, std::move(per));
  }
  const auto& s = std::get<std::shared_ptr<const SchemeBase>>(rep_);
  switch (s->kind()) {
    case SchemeKind::concat: {
      const auto& c = static_cast<const ConcatScheme&>(*s);
      if (n < c.head().size())
        return concat(Word(c.head().begin() + static_cast<std::ptrdiff_t>(n),
                           c.head().end()),
                      c.tail());
      return c.tail().shifted(n - c.head().size());
    }
    case SchemeKind::shifted: {
      const auto& sh = static_cast<const ShiftedScheme&>(*s);
      return sh.base().shifted(sh.by() + n);
    }
    case SchemeKind::diagonal: {
      const auto& d = static_cast<const DiagonalScheme&>(*s);
      return Point(std::make_shared<const DiagonalScheme>(d.stream(), d.offset() + n));
    }
    default:
      return Point(std::make_shared<const ShiftedScheme>(*this, n));
  }
}

const SchemeBase& Point::scheme() const {
  if (is_eventually_periodic())
    throw PreconditionError("scheme() on an eventually periodic point");
  return *std::get<std::shared_ptr<const SchemeBase>>(rep_);
}

std::shared_ptr<const SchemeBase> Point::scheme_ptr() const {
  if (is_eventually_periodic()) return nullptr;
  return std::get<std::shared_ptr<const SchemeBase>>(rep_);
}

std::set<Symbol> Point::ep_symbols() const {
  const Word& pre = preperiod();
  const Word& per = period();
  std::set<Symbol> out(pre.begin(), pre.end());
  out.insert(per.begin(), per.end());
  return out;
}

std::uint64_t Point::ep_scan_bound(std::uint64_t window) const {
  return preperiod().size() + 2 * period().size() + window;
}

bool ep_equal(const Point& x, const Point& y) {
  if (!x.is_eventually_periodic() || !y.is_eventually_periodic())
    throw PreconditionError("ep_equal needs eventually periodic arguments");
  return x.preperiod() == y.preperiod() && x.period() == y.period();
}

bool ep_less(const Point& x, const Point& y) {
  if (x.preperiod() != y.preperiod()) return x.preperiod() < y.preperiod();
  return x.period() < y.period();
}

LcpResult lcp(const Point& x, const Point& y, std::uint64_t horizon) {
  if (x.is_eventually_periodic() && y.is_eventually_periodic()) {
    // First disagreement, if any, happens before max preperiod + lcm of the
    // periods; agreement that far is agreement everywhere.
    const std::uint64_t m = std::max(x.preperiod().size(), y.preperiod().size());
    const std::uint64_t l = std::lcm<std::uint64_t>(x.period().size(), y.period().size());
    const std::uint64_t bound = m + l;
    for (std::uint64_t i = 0; i < bound; ++i)
      if (x.at(i) != y.at(i)) return {LcpResult::Kind::finite, i};
    return {LcpResult::Kind::infinite, 0};
  }
  for (std::uint64_t i = 0; i < horizon; ++i)
    if (x.at(i) != y.at(i)) return {LcpResult::Kind::finite, i};
  return {LcpResult::Kind::at_least_horizon, horizon};
}

DistanceResult distance(const Point& x, const Point& y, std::uint64_t horizon) {
  const LcpResult l = lcp(x, y, horizon);
  switch (l.kind) {
    case LcpResult::Kind::infinite:
      return {Dyadic::zero(), true};
    case LcpResult::Kind::finite:
      return {Dyadic::pow2_neg(static_cast<std::uint32_t>(
                  std::min<std::uint64_t>(l.value, 0xFFFFFFFEull))),
              true};
    case LcpResult::Kind::at_least_horizon:
    default:
      return {Dyadic::pow2_neg(static_cast<std::uint32_t>(
                  std::min<std::uint64_t>(l.value, 0xFFFFFFFEull))),
              false};
  }
}

bool agree_on_prefix(const Point& x, const Point& y, std::uint64_t len) {
  for (std::uint64_t i = 0; i < len; ++i)
    if (x.at(i) != y.at(i)) return false;
  return true;
}

Word point_slice(const Point& x, std::uint64_t from, std::uint64_t to) {
  Word out;
  out.reserve(to > from ? static_cast<std::size_t>(to - from) : 0);
  for (std::uint64_t i = from; i < to; ++i) out.push_back(x.at(i));
  return out;
}

std::string format_point(const Point& x) {
  if (x.is_eventually_periodic())
    return format_word(x.preperiod()) + "|" + format_word(x.period());
  switch (x.scheme().kind()) {
    case SchemeKind::remark1: return "remark1";
    case SchemeKind::remark2: return "remark2";
    case SchemeKind::interleave: return "scheme:interleave";
    case SchemeKind::concat: return "scheme:concat";
    case SchemeKind::diagonal: return "scheme:diagonal";
    case SchemeKind::shifted: return "scheme:shifted";
  }
  return "scheme:?";
}

std::optional<Point> parse_point(std::string_view text) {
  if (text == "remark1") return Point::remark1();
  if (text == "remark2") return Point::remark2();
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos) return std::nullopt;
  if (text.find('|', bar + 1) != std::string_view::npos) return std::nullopt;
  auto pre = parse_word(text.substr(0, bar));
  auto per = parse_word(text.substr(bar + 1));
  if (!pre || !per || per->empty()) return std::nullopt;
  return Point::eventually_periodic(std::move(*pre), std::move(*per));
}

// --- scheme classes --------------------------------------------------------

InterleaveScheme::InterleaveScheme(std::vector<Point> points, Symbol separator_start)
    : points_(std::move(points)), sep_start_(separator_start) {
  if (points_.empty()) throw SpecError("interleave scheme needs at least one point");
}

Symbol InterleaveScheme::at(std::uint64_t i) const {
  const std::uint64_t z = points_.size();
  // Round q holds z blocks of length q+1, each closed by one separator:
  // consumed(q) = z * q * (q+3) / 2 positions before round q.
  auto consumed = [z](std::uint64_t q) { return z * q * (q + 3) / 2; };
  std::uint64_t lo = 0, hi = 2;
  while (consumed(hi) <= i) hi *= 2;
  while (lo < hi) {  // largest q with consumed(q) <= i
    std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (consumed(mid) <= i) lo = mid; else hi = mid - 1;
  }
  const std::uint64_t q = lo;
  const std::uint64_t o = i - consumed(q);
  const std::uint64_t r = o / (q + 2);
  const std::uint64_t off = o % (q + 2);
  if (off <= q) return points_[static_cast<std::size_t>(r)].at(off);
  return static_cast<Symbol>(sep_start_ + (q * z + r));
}

ConcatScheme::ConcatScheme(Word head, Point tail)
    : head_(std::move(head)), tail_(std::move(tail)) {}

Symbol ConcatScheme::at(std::uint64_t i) const {
  if (i < head_.size()) return head_[static_cast<std::size_t>(i)];
  return tail_.at(i - head_.size());
}

ShiftedScheme::ShiftedScheme(Point base, std::uint64_t by)
    : base_(std::move(base)), by_(by) {}

Symbol ShiftedScheme::at(std::uint64_t i) const { return base_.at(by_ + i); }

DiagonalScheme::DiagonalScheme(std::shared_ptr<const PointStream> stream,
                               std::uint64_t offset)
    : stream_(std::move(stream)), offset_(offset) {
  if (!stream_) throw SpecError("diagonal scheme needs a stream");
}

Symbol DiagonalScheme::at(std::uint64_t i) const {
  return stream_->at(offset_ + i).at(0);
}

}  // namespace shiftlab
