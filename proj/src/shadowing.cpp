#include "shiftlab/shadowing.hpp"

#include <algorithm>
#include <numeric>

#include "shiftlab/errors.hpp"

namespace shiftlab {

ShadowingModulus shadowing_modulus(const Subshift& shift, Dyadic eps) {
  if (!shift.is_sbt()) throw PreconditionError("shadowing modulus needs a bounded basis");
  if (eps.is_zero()) throw PreconditionError("shadowing modulus needs eps > 0");
  const std::uint32_t L = shift.max_basis_length();
  // Smallest m with 2^(-m) < eps is e+1; the overlap must also span every
  // basis window minus one.
  const std::uint32_t m = std::max(L >= 1 ? L - 1 : 0, eps.neg_exponent() + 1);
  return {m, Dyadic::pow2_neg(m - 1)};
}

std::optional<std::uint64_t> verify_pseudo_orbit(const PseudoOrbit& po,
                                                 std::uint64_t horizon) {
  for (std::size_t i = 0; i + 1 < po.points.size(); ++i) {
    const DistanceResult d = distance(po.points[i].shifted(1), po.points[i + 1], horizon);
    // Inexact results carry the upper bound 2^(-horizon): the step certifies
    // when that bound already clears the threshold, otherwise it is reported.
    if (!(d.value < po.delta)) return i;
  }
  return std::nullopt;
}

Point synthesize_shadow(const Subshift& shift, const PseudoOrbit& po,
                        std::uint64_t horizon) {
  if (po.points.empty()) throw PreconditionError("empty pseudo-orbit");
  if (po.delta.is_zero()) throw PreconditionError("pseudo-orbit delta must be positive");
  const std::uint32_t L = shift.max_basis_length();
  const std::uint32_t overlap = po.delta.neg_exponent() + 1;  // delta = 2^(1-M)
  if (overlap < std::max<std::uint32_t>(L >= 1 ? L - 1 : 0, 1))
    throw PreconditionError("pseudo-orbit delta too loose for this basis");
  if (auto bad = verify_pseudo_orbit(po, horizon))
    throw PreconditionError("pseudo-orbit fails its delta bound at step " +
                            std::to_string(*bad));
  for (std::size_t i = 0; i < po.points.size(); ++i)
    if (!shift.contains(po.points[i], std::max<std::uint64_t>(horizon, L)).value)
      throw PreconditionError("pseudo-orbit entry " + std::to_string(i) +
                              " is not in the subshift");

  Word heads;
  heads.reserve(po.points.size() - 1);
  for (std::size_t i = 0; i + 1 < po.points.size(); ++i)
    heads.push_back(po.points[i].at(0));
  Point z = Point::concat(std::move(heads), po.points.back());

  // The construction guarantees both properties; failing either here means a
  // bug, not bad input.
  if (!shift.contains(z, std::max<std::uint64_t>(horizon, L)).value)
    throw std::logic_error("synthesized shadow left the subshift");
  if (verify_shadow(z, po, po.delta))
    throw std::logic_error("synthesized shadow misses its bound");
  return z;
}

Point back_extend(const Subshift& shift, const Point& x, std::uint64_t steps,
                  std::uint64_t horizon) {
  const std::uint32_t L = shift.max_basis_length();
  const std::uint64_t h = std::max<std::uint64_t>(horizon, L);
  if (!shift.contains(x, h).value)
    throw PreconditionError("back extension of a point outside the subshift");
  if (steps == 0) return x;

  if (shift.unrestricted_sft()) {
    std::vector<Symbol> avoid;
    if (x.is_eventually_periodic()) {
      const auto syms = x.ep_symbols();
      avoid.assign(syms.begin(), syms.end());
    } else {
      const Word visible = point_slice(x, 0, L + steps + 8);
      avoid.assign(visible.begin(), visible.end());
    }
    const std::vector<Symbol> fresh = shift.fresh_symbols(steps, avoid);
    return Point::concat(Word(fresh.begin(), fresh.end()), x);
  }

  // Declared alphabets and rule bases: smallest admissible symbol first.
  Point cur = x;
  const std::uint32_t head_len = L >= 1 ? L - 1 : 0;
  for (std::uint64_t k = 0; k < steps; ++k) {
    bool found = false;
    for (Symbol s : shift.search_domain()) {
      Word w;
      w.push_back(s);
      const Word head = point_slice(cur, 0, head_len);
      w.insert(w.end(), head.begin(), head.end());
      if (!shift.globally_allowed(w).value) continue;
      cur = Point::concat({s}, cur);
      found = true;
      break;
    }
    if (!found)
      throw SpecError("no back-extension within the declared alphabet at prefix \"" +
                      format_word(point_slice(cur, 0, head_len)) + "\"");
  }
  return cur;
}

Point synthesize_asymptotic_shadow(const Subshift& shift,
                                   std::shared_ptr<const AsymptoticPseudoOrbit> apo,
                                   std::uint64_t horizon) {
  if (!apo) throw PreconditionError("null asymptotic pseudo-orbit");
  if (!shift.is_sbt()) throw PreconditionError("asymptotic shadowing needs a bounded basis");
  const std::uint32_t L = shift.max_basis_length();
  const std::uint32_t m0 = std::max<std::uint32_t>(L, 1);
  const std::uint64_t start = apo->rate(m0);
  Point diag = diagonal_point(apo, start);
  Point z = (start > 0) ? back_extend(shift, diag, start, horizon) : diag;
  if (!shift.contains(z, std::max<std::uint64_t>(horizon, L)).value)
    throw PreconditionError(
        "asymptotic shadow output left the subshift; a streamed point is outside it");
  return z;
}

std::optional<std::uint64_t> expansivity_witness(const Point& x, const Point& y,
                                                 std::uint64_t horizon) {
  std::uint64_t scan = horizon;
  if (x.is_eventually_periodic() && y.is_eventually_periodic()) {
    const std::uint64_t bound =
        std::max(x.preperiod().size(), y.preperiod().size()) +
        std::lcm<std::uint64_t>(x.period().size(), y.period().size());
    scan = std::min(scan, bound);  // agreement past the bound is agreement everywhere
  }
  for (std::uint64_t i = 0; i < scan; ++i)
    if (x.at(i) != y.at(i)) return i;
  return std::nullopt;
}

std::optional<std::uint64_t> verify_shadow(const Point& z, const PseudoOrbit& po,
                                           Dyadic eps) {
  if (eps.is_zero()) throw PreconditionError("shadow check needs eps > 0");
  const std::uint64_t agree = eps.neg_exponent() + 1;  // d < 2^(-e)
  for (std::size_t i = 0; i < po.points.size(); ++i)
    for (std::uint64_t l = 0; l < agree; ++l)
      if (z.at(i + l) != po.points[i].at(l)) return i;
  return std::nullopt;
}

std::optional<AsymptoticShadowViolation> verify_asymptotic_shadow(
    const Point& z, const AsymptoticPseudoOrbit& apo, const Subshift& shift,
    std::uint32_t m_cap, std::uint64_t horizon) {
  const std::uint32_t m0 = std::max<std::uint32_t>(shift.max_basis_length(), 1);
  for (std::uint32_t m = 1; m <= m_cap; ++m) {
    const std::uint64_t from = apo.rate(m + m0);
    for (std::uint64_t i = from; i < horizon; ++i) {
      const Point target = apo.at(i);
      for (std::uint64_t l = 0; l <= m; ++l)
        if (z.at(i + l) != target.at(l)) return AsymptoticShadowViolation{m, i};
    }
  }
  return std::nullopt;
}

}  // namespace shiftlab
