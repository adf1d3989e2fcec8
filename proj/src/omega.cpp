#include "shiftlab/omega.hpp"

#include <algorithm>

#include "shiftlab/errors.hpp"
#include "shiftlab/scan.hpp"

namespace shiftlab {

namespace {

// Intersection of the factor sets over the dyadic window ladder.
std::set<Word> ladder_intersection(const std::function<std::set<Word>(std::uint64_t,
                                                                      std::uint64_t)>& window_set,
                                   std::uint64_t t0, std::uint32_t levels) {
  std::set<Word> acc;
  bool first = true;
  for (std::uint32_t j = 0; j < levels; ++j) {
    const std::uint64_t from = t0 << j;
    const std::uint64_t to = t0 << (j + 1);
    std::set<Word> cur = window_set(from, to);
    if (first) {
      acc = std::move(cur);
      first = false;
    } else {
      std::set<Word> meet;
      std::set_intersection(acc.begin(), acc.end(), cur.begin(), cur.end(),
                            std::inserter(meet, meet.begin()));
      acc = std::move(meet);
    }
    if (acc.empty()) break;
  }
  return acc;
}

// Exact omega prefixes of an eventually periodic point: the orbit closure of
// the tail is the periodic orbit of per^inf, so the prefixes are its cyclic
// windows.
std::set<Word> ep_omega_prefixes(const Point& x, std::uint32_t n) {
  const Word& per = x.period();
  std::set<Word> out;
  Word w;
  w.reserve(n);
  for (std::size_t k = 0; k < per.size(); ++k) {
    w.clear();
    for (std::uint32_t i = 0; i < n; ++i) w.push_back(per[(k + i) % per.size()]);
    out.insert(w);
  }
  return out;
}

bool certified_scheme(const Point& x, std::uint32_t n, std::uint64_t t0) {
  if (x.is_eventually_periodic()) return true;
  const SchemeKind k = x.scheme().kind();
  // The two counterexample schemes stabilize once every window holds a full
  // 0-run and 1-run and separators stop recurring; t0 >= 64 covers depth <= 8.
  return (k == SchemeKind::remark1 || k == SchemeKind::remark2) && t0 >= 64 && n <= 8;
}

}  // namespace

std::set<Word> factor_set(const Point& x, std::uint32_t n, std::uint64_t from,
                          std::uint64_t to) {
  if (n == 0) throw PreconditionError("factor depth must be positive");
  if (from + n > to) throw PreconditionError("factor window shorter than the depth");
  const std::vector<Symbol> buf = scan::materialize(x, from, to);
  return scan::factor_set(std::span<const Symbol>(buf), n);
}

OmegaApprox omega_prefixes(const Point& x, std::uint32_t n, std::uint64_t t0,
                           std::uint32_t levels) {
  if (n == 0 || levels == 0) throw PreconditionError("depth and levels must be positive");
  if (t0 < n) throw PreconditionError("ladder start below the depth");
  OmegaApprox out;
  out.depth = n;
  out.t0 = t0;
  out.levels = levels;
  if (x.is_eventually_periodic()) {
    out.prefixes = ep_omega_prefixes(x, n);
    out.exact = true;
    return out;
  }
  out.prefixes = ladder_intersection(
      [&](std::uint64_t from, std::uint64_t to) { return factor_set(x, n, from, to); },
      t0, levels);
  out.exact = certified_scheme(x, n, t0);
  return out;
}

OmegaApprox sequence_omega_prefixes(const PointStream& stream, std::uint32_t n,
                                    std::uint64_t t0, std::uint32_t levels) {
  if (n == 0 || levels == 0) throw PreconditionError("depth and levels must be positive");
  if (t0 < n) throw PreconditionError("ladder start below the depth");
  OmegaApprox out;
  out.depth = n;
  out.t0 = t0;
  out.levels = levels;
  out.prefixes = ladder_intersection(
      [&](std::uint64_t from, std::uint64_t to) {
        std::set<Word> cur;
        for (std::uint64_t i = from; i < to; ++i)
          cur.insert(point_slice(stream.at(i), 0, n));
        return cur;
      },
      t0, levels);
  out.exact = false;
  return out;
}

std::set<Word> z_prefixes(const SetPresentation& Z, std::uint32_t n) {
  if (n == 0) throw PreconditionError("prefix depth must be positive");
  switch (Z.kind()) {
    case SetKind::finite_ep: {
      std::set<Word> out;
      for (const Point& p : Z.points()) out.insert(point_slice(p, 0, n));
      return out;
    }
    case SetKind::remark2_family: {
      // {0^inf} union {0^k 1^inf}: exactly the words 0^a 1^b with a+b = n.
      std::set<Word> out;
      for (std::uint32_t a = 0; a <= n; ++a) {
        Word w(n, 1);
        std::fill(w.begin(), w.begin() + a, 0);
        out.insert(std::move(w));
      }
      return out;
    }
    case SetKind::prefix_oracle:
    default:
      return Z.oracle_prefixes(n);
  }
}

std::optional<std::uint64_t> attracting_check(const Point& x, const SetPresentation& Z,
                                              Dyadic eps, std::uint64_t N,
                                              std::uint64_t horizon) {
  if (eps.is_zero()) throw PreconditionError("attracting check needs eps > 0");
  if (horizon <= N) throw PreconditionError("attracting horizon must exceed N");
  // d(y, Z) < 2^(-e) holds exactly when the (e+1)-prefix of y is one of Z's.
  const std::uint32_t depth = eps.neg_exponent() + 1;
  const std::set<Word> ok = z_prefixes(Z, depth);
  const std::vector<Symbol> buf = scan::materialize(x, N, horizon + depth - 1);
  const auto bad = scan::first_window_not_in(std::span<const Symbol>(buf), depth, ok);
  if (!bad) return std::nullopt;
  return N + *bad;
}

bool omega_equals(const Point& x, const SetPresentation& Z, std::uint32_t n,
                  std::uint64_t t0, std::uint32_t levels) {
  return omega_prefixes(x, n, t0, levels).prefixes == z_prefixes(Z, n);
}

}  // namespace shiftlab
