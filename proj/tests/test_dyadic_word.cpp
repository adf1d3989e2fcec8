#include <random>

#include "doctest.h"
#include "shiftlab/dyadic.hpp"
#include "shiftlab/word.hpp"

using namespace shiftlab;

TEST_CASE("dyadic ordering and text form") {
  const Dyadic zero = Dyadic::zero();
  const Dyadic one = Dyadic::one();
  const Dyadic half = Dyadic::pow2_neg(1);
  const Dyadic quarter = Dyadic::pow2_neg(2);

  CHECK(zero < quarter);
  CHECK(quarter < half);
  CHECK(half < one);
  CHECK(!(one < one));
  CHECK(zero == Dyadic::zero());

  CHECK(zero.str() == "0");
  CHECK(one.str() == "1");
  CHECK(quarter.str() == "2^-2");

  CHECK(Dyadic::parse("2^-7") == Dyadic::pow2_neg(7));
  CHECK(Dyadic::parse("1") == one);
  CHECK(Dyadic::parse("0") == zero);
  CHECK(!Dyadic::parse("2^-") .has_value());
  CHECK(!Dyadic::parse("0.5").has_value());
  CHECK(!Dyadic::parse("2^-x").has_value());
}

TEST_CASE("contains_factor") {
  CHECK(contains_factor({0, 0, 0, 4}, {0, 4}));
  CHECK(!contains_factor({0, 1, 2}, {2, 1}));
  CHECK(contains_factor({3, 2, 2, 1}, {2, 2}));
  CHECK(contains_factor({1, 2, 3}, {}));
  CHECK(contains_factor({}, {}));
  CHECK(!contains_factor({}, {0}));
  CHECK(contains_factor({5}, {5}));
}

TEST_CASE("word codec round trip") {
  CHECK(format_word({0, 4, 1, 1}) == "0 4 1 1");
  CHECK(format_word({}) == "");
  CHECK(parse_word("0 4 1 1") == Word{0, 4, 1, 1});
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("  7  ") == Word{7});
  CHECK(!parse_word("1 -2").has_value());
  CHECK(!parse_word("a b").has_value());

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<Symbol> sym(0, 1000);
  for (int t = 0; t < 200; ++t) {
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(sym(rng));
    CHECK(parse_word(format_word(w)) == w);
  }
}
