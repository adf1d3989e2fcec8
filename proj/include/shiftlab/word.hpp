#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace shiftlab {

// The countable alphabet is identified with the nonnegative integers.
using Symbol = std::uint32_t;

// A finite word over the alphabet, possibly empty, indexed from 0.
using Word = std::vector<Symbol>;

// True iff f occurs as a contiguous block of w.  The empty word is a factor
// of every word.
bool contains_factor(const Word& w, const Word& f);

// Word text codec: base-10 symbols separated by single spaces, e.g. "0 4 1 1".
// The empty word prints as "" and parses from an empty/blank string.
std::string format_word(const Word& w);
std::optional<Word> parse_word(std::string_view text);

// w followed by v.
Word concat_words(const Word& w, const Word& v);

}  // namespace shiftlab
