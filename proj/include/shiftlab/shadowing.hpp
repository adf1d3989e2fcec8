#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "shiftlab/dyadic.hpp"
#include "shiftlab/point.hpp"
#include "shiftlab/stream.hpp"
#include "shiftlab/subshift.hpp"

namespace shiftlab {

// A finite pseudo-orbit with its claimed per-step defect bound.
struct PseudoOrbit {
  std::vector<Point> points;  // nonempty
  Dyadic delta;               // claimed bound, > 0
};

struct ShadowingModulus {
  std::uint32_t overlap = 1;  // M
  Dyadic delta;               // 2^(1-M)
};

// For a bounded basis and eps = 2^(-e) > 0: M = max(L-1, e+1) and
// delta = 2^(1-M).  Any delta-pseudo-orbit in the subshift is then
// eps-shadowed by the synthesized point (d < delta iff overlap >= M).
ShadowingModulus shadowing_modulus(const Subshift& shift, Dyadic eps);

// First index i with d(shift(x_i), x_{i+1}) not certified < delta, or absent
// when every step passes.  Exact for eventually periodic entries; for
// scheme-backed entries a step certifies when agreement reaches min(horizon,
// exponent+1) symbols.
std::optional<std::uint64_t> verify_pseudo_orbit(const PseudoOrbit& po,
                                                 std::uint64_t horizon);

// The diagonal construction: z takes the initial entry of each pseudo-orbit
// point and closes with the final point verbatim.  Requires the orbit
// verified at delta = 2^(1-M) with M >= max(L-1, 1) and every entry in the
// subshift; re-verifies membership and the shadow bound before returning
// (failure of either would be an implementation bug and throws).
Point synthesize_shadow(const Subshift& shift, const PseudoOrbit& po,
                        std::uint64_t horizon);

// Asymptotic variant: starts the diagonal once step overlaps reach
// max(L, 1) and back-extends across the skipped indices.  The output z
// satisfies d(shift^i(z), x_i) < 2^(-m) for all i >= rate(m + max(L, 1)).
Point synthesize_asymptotic_shadow(const Subshift& shift,
                                   std::shared_ptr<const AsymptoticPseudoOrbit> apo,
                                   std::uint64_t horizon);

// A point y of the subshift with shift^steps(y) = x.  Explicit bases over the
// unrestricted alphabet prepend fresh symbols; declared-alphabet and rule
// bases search the domain smallest-first and require each extended window to
// be admissible.  Throws SpecError when no extension exists in the domain.
Point back_extend(const Subshift& shift, const Point& x, std::uint64_t steps,
                  std::uint64_t horizon);

// Smallest n < horizon with x_n != y_n (there d(shift^n x, shift^n y) = 1,
// the expansivity constant); absent when the points agree to the horizon.
std::optional<std::uint64_t> expansivity_witness(const Point& x, const Point& y,
                                                 std::uint64_t horizon);

// First index i < |po| with d(shift^i(z), x_i) >= eps, or absent.  Exact:
// d < 2^(-e) is agreement on e+1 symbols.
std::optional<std::uint64_t> verify_shadow(const Point& z, const PseudoOrbit& po,
                                           Dyadic eps);

// Asymptotic check: for each m <= m_cap, violations of 2^(-m) must cease by
// the claimed N'(m) = rate(m + max(L,1)).  Returns the first (m, i) failure.
struct AsymptoticShadowViolation {
  std::uint32_t m = 0;
  std::uint64_t index = 0;
};
std::optional<AsymptoticShadowViolation> verify_asymptotic_shadow(
    const Point& z, const AsymptoticPseudoOrbit& apo, const Subshift& shift,
    std::uint32_t m_cap, std::uint64_t horizon);

}  // namespace shiftlab
