#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace shiftlab {

// ============================================================================
// Dyadic — the value set of the shift metric, kept exact.
//
// Every distance between infinite sequences is 2^(-n) for the length n of the
// longest common prefix, or 0 when the sequences agree everywhere.  All the
// delta/epsilon thresholds in chain and shadowing definitions are compared
// with strict inequalities against such values, so they are stored as the
// exponent n (with a sentinel for 0 = 2^(-infinity)) and never as a float.
//
// Normative conventions used across the library:
//   d(x,y) <  2^(-m)  <=>  lcp(x,y) >= m+1   (agreement on m+1 symbols)
//   d(x,y) <= 2^(-m)  <=>  lcp(x,y) >= m     (agreement on m symbols)
// ============================================================================
class Dyadic {
 public:
  constexpr Dyadic() : e_(kZeroTag) {}  // value 0

  static constexpr Dyadic zero() { return Dyadic(); }
  static constexpr Dyadic one() { return Dyadic(0); }

  // The value 2^(-m).
  static constexpr Dyadic pow2_neg(std::uint32_t m) { return Dyadic(m); }

  constexpr bool is_zero() const { return e_ == kZeroTag; }

  // Exponent m of a positive value 2^(-m).  Meaningless for zero.
  constexpr std::uint32_t neg_exponent() const { return e_; }

  friend constexpr bool operator==(Dyadic a, Dyadic b) { return a.e_ == b.e_; }

  // Numeric order: 0 < ... < 1/4 < 1/2 < 1.
  friend constexpr bool operator<(Dyadic a, Dyadic b) {
    if (a.e_ == b.e_) return false;
    if (a.is_zero()) return true;
    if (b.is_zero()) return false;
    return a.e_ > b.e_;
  }
  friend constexpr bool operator<=(Dyadic a, Dyadic b) { return a == b || a < b; }
  friend constexpr bool operator>(Dyadic a, Dyadic b) { return b < a; }
  friend constexpr bool operator>=(Dyadic a, Dyadic b) { return b <= a; }

  // Text form used by the CLI and reports: "0", "1", or "2^-m".
  std::string str() const;
  static std::optional<Dyadic> parse(std::string_view text);

 private:
  explicit constexpr Dyadic(std::uint32_t e) : e_(e) {}
  static constexpr std::uint32_t kZeroTag = 0xFFFFFFFFu;
  std::uint32_t e_;
};

}  // namespace shiftlab
