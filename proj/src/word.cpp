#include "shiftlab/word.hpp"

#include <charconv>
#include <sstream>

namespace shiftlab {

bool contains_factor(const Word& w, const Word& f) {
  if (f.empty()) return true;
  if (f.size() > w.size()) return false;
  for (std::size_t i = 0; i + f.size() <= w.size(); ++i) {
    bool match = true;
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (w[i + j] != f[j]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

std::optional<Word> parse_word(std::string_view text) {
  Word out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    Symbol s = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, s);
    if (ec != std::errc{} || ptr != text.data() + j) return std::nullopt;
    out.push_back(s);
    i = j;
  }
  return out;
}

Word concat_words(const Word& w, const Word& v) {
  Word out = w;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace shiftlab
