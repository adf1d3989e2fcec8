#pragma once

#include <cstdint>
#include <optional>
#include <set>

#include "shiftlab/dyadic.hpp"
#include "shiftlab/point.hpp"
#include "shiftlab/stream.hpp"
#include "shiftlab/transitivity.hpp"

namespace shiftlab {

// ============================================================================
// Finite-horizon omega-limit approximation.
//
// The depth-n prefix set of omega(x) is approximated by intersecting the
// factor sets of dyadically growing disjoint windows
//     [t0, 2 t0), [2 t0, 4 t0), ..., [2^(levels-1) t0, 2^levels t0).
// Words that occur only finitely often (separators in the counterexample
// schemes) fall out of some window and die in the intersection; words from
// the true limit set persist.  The reported set always contains the true
// prefix set; equality is certified only for eventually periodic points
// (computed in closed form) and for the built-in counterexample schemes
// within their documented stabilization range.
// ============================================================================

struct OmegaApprox {
  std::uint32_t depth = 1;
  std::set<Word> prefixes;  // all of length `depth`
  std::uint64_t t0 = 0;
  std::uint32_t levels = 0;
  bool exact = false;
};

// { x[i, i+n) : from <= i <= to - n }.
std::set<Word> factor_set(const Point& x, std::uint32_t n, std::uint64_t from,
                          std::uint64_t to);

// Ladder intersection described above; requires t0 >= n.
OmegaApprox omega_prefixes(const Point& x, std::uint32_t n, std::uint64_t t0,
                           std::uint32_t levels);

// Same ladder over the length-n prefixes of stream entries.
OmegaApprox sequence_omega_prefixes(const PointStream& stream, std::uint32_t n,
                                    std::uint64_t t0, std::uint32_t levels);

// Exact depth-n prefix set of a presented set.
std::set<Word> z_prefixes(const SetPresentation& Z, std::uint32_t n);

// First i in [N, horizon) with d(shift^i(x), Z) >= eps, or absent.  With
// eps = 2^(-e), closeness to Z is exactly membership of the length-(e+1)
// prefix of shift^i(x) in Z's prefix set at depth e+1.
std::optional<std::uint64_t> attracting_check(const Point& x,
                                              const SetPresentation& Z,
                                              Dyadic eps, std::uint64_t N,
                                              std::uint64_t horizon);

// omega_prefixes(x, n, t0, levels) == z_prefixes(Z, n).
bool omega_equals(const Point& x, const SetPresentation& Z, std::uint32_t n,
                  std::uint64_t t0, std::uint32_t levels);

}  // namespace shiftlab
