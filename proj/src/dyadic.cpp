#include "shiftlab/dyadic.hpp"

#include <charconv>

namespace shiftlab {

std::string Dyadic::str() const {
  if (is_zero()) return "0";
  if (e_ == 0) return "1";
  return "2^-" + std::to_string(e_);
}

std::optional<Dyadic> Dyadic::parse(std::string_view text) {
  if (text == "0") return zero();
  if (text == "1") return one();
  constexpr std::string_view prefix = "2^-";
  if (text.size() <= prefix.size() || text.substr(0, prefix.size()) != prefix)
    return std::nullopt;
  std::string_view digits = text.substr(prefix.size());
  std::uint32_t m = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
  if (m == kZeroTag) return std::nullopt;
  return pow2_neg(m);
}

}  // namespace shiftlab
