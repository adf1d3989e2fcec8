#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <vector>

#include "shiftlab/dyadic.hpp"
#include "shiftlab/point.hpp"
#include "shiftlab/stream.hpp"
#include "shiftlab/subshift.hpp"

namespace shiftlab {

// ============================================================================
// Finitely described subsets of a subshift, delta-chains within them, and the
// realization constructions that turn chain-transitive or invariant sets into
// omega-limit sets.
// ============================================================================

enum class SetKind { finite_ep, remark2_family, prefix_oracle };

// A finitely described subset Z.
//
//   finite_ep      — a finite set of eventually periodic points in normal
//                    form (finite sets are closed automatically).
//   remark2_family — {0^inf, 1^inf} union {0^k 1^inf : k >= 0}, presented by
//                    its closed-form prefix sets.
//   prefix_oracle  — an in-process depth -> prefix-set callback (test use;
//                    not serializable).
class SetPresentation {
 public:
  static SetPresentation finite(std::vector<Point> points);
  static SetPresentation remark2_family();
  static SetPresentation prefix_oracle(
      std::function<std::set<Word>(std::uint32_t)> oracle);

  SetKind kind() const { return kind_; }
  const std::vector<Point>& points() const;  // finite_ep only
  std::set<Word> oracle_prefixes(std::uint32_t depth) const;

 private:
  SetPresentation() = default;
  SetKind kind_ = SetKind::finite_ep;
  std::vector<Point> points_;
  std::function<std::set<Word>(std::uint32_t)> oracle_;
};

struct DeltaChain {
  std::vector<Point> entries;  // nonempty; d(shift(e_i), e_{i+1}) < delta
  Dyadic delta;
};

// Shortest chain from a to b through points of Z with every step defect
// < delta (exact dyadic tests), within max_len entries.  The trivial chain
// [a] answers a == b.  Absence is exact.  Throws PreconditionError when a or
// b is not in Z.
std::optional<DeltaChain> find_delta_chain(const SetPresentation& Z,
                                           const Point& a, const Point& b,
                                           Dyadic delta, std::size_t max_len);

// Shortest chain of length >= 2 from a back to a (at least one real step).
std::optional<DeltaChain> find_return_chain(const SetPresentation& Z,
                                            const Point& a, Dyadic delta,
                                            std::size_t max_len);

// Every ordered pair of Z is delta-chain connected.
bool is_ict(const SetPresentation& Z, Dyadic delta, std::size_t max_len);

// Exact certificate of chain transitivity at every positive delta: since Z is
// finite and defects are exact dyadics, chains exist for all delta iff the
// zero-defect step graph connects every ordered pair through at least one
// real step (a fixed point for singletons).
bool ict_certified(const SetPresentation& Z);

// shift(Z) = Z as sets of normal forms.
bool check_closed_invariant(const SetPresentation& Z);

// The chain-concatenation stream: targets cycle over Z so each point recurs
// infinitely often; consecutive targets are joined by shortest 2^(-n)-chains
// whose tightness increases with the leg index n.  The rate function is exact,
// computed from the actual step defects and the cumulative leg lengths.
// `ladder` lists the rungs on which chain transitivity is verified up front.
// Throws PreconditionError when some required chain does not exist.
std::shared_ptr<const AsymptoticPseudoOrbit> ict_to_apo(
    const SetPresentation& Z, const std::vector<Dyadic>& ladder);

// Realization of a chain-transitive Z as an attracting omega-limit set:
// chain stream composed with asymptotic shadow synthesis.
Point realize_ict(const Subshift& shift, const SetPresentation& Z,
                  std::uint64_t horizon);

// The fresh-symbol connecting chain in an explicit-basis subshift over the
// unrestricted alphabet: z = x[1..N+1) c y with c fresh and 2^(-N) < delta
// yields the chain x, z, shift(z), ..., c.y, y.  Every entry is verified in
// the subshift.
DeltaChain sft_connecting_chain(const Subshift& shift, const Point& x,
                                const Point& y, Dyadic delta,
                                std::uint64_t horizon);

// Realization of a closed invariant Z in an explicit-basis subshift over the
// unrestricted alphabet: interleave every initial segment of every point of Z
// (round-robin, growing length) with strictly increasing fresh separators.
Point realize_invariant_sft(const Subshift& shift, const SetPresentation& Z,
                            std::uint64_t horizon);

// The chain stream behind ict_to_apo, exposed for serialization.
class IctChainStream final : public AsymptoticPseudoOrbit {
 public:
  IctChainStream(std::vector<Point> points, std::vector<Dyadic> ladder);
  Point at(std::uint64_t i) const override;
  std::uint64_t rate(std::uint32_t m) const override;
  StreamKind kind() const override { return StreamKind::ict_chains; }
  const std::vector<Point>& points() const { return points_; }
  const std::vector<Dyadic>& ladder() const { return ladder_; }

 private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
  std::vector<Point> points_;
  std::vector<Dyadic> ladder_;
};

}  // namespace shiftlab
