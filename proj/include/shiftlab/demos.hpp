#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace shiftlab::demos {

using nlohmann::json;

// Named reproduction bundles with pinned horizons, ladders and seeds.  Each
// returns a report whose "pass" field is the conjunction of its assertions.
//
//   remark1          — full-shift point with omega limits {0^inf, 1^inf},
//                      a set that is closed and invariant but not chain
//                      transitive
//   remark2          — full-shift point whose omega limit is not a union of
//                      closed chain-transitive sets
//   monotone         — the bounded-type-not-finite-type shift: shadowing
//                      works, chain transitivity fails, orbits are confined
//   dichotomy-finite — finite-alphabet finite-type shift that is not chain
//                      transitive
//   sbt-ict          — chain-transitive sets realized as attracting
//                      omega-limit sets, both directions
//   sft-realize      — closed invariant sets (including non-chain-transitive
//                      ones) realized as omega-limit sets
const std::vector<std::string>& demo_names();

json run_demo(const std::string& name);

}  // namespace shiftlab::demos
