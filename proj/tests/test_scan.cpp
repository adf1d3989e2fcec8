#include <random>

#include "doctest.h"
#include "shiftlab/scan.hpp"

using namespace shiftlab;

TEST_CASE("materialize matches symbol_at") {
  const Point x = Point::remark2();
  const auto buf = scan::materialize(x, 100, 356);
  REQUIRE(buf.size() == 256);
  for (std::size_t i = 0; i < buf.size(); ++i) CHECK(buf[i] == x.at(100 + i));
  CHECK(scan::materialize(x, 5, 5).empty());
}

TEST_CASE("parallel kernels match the serial reference") {
  std::mt19937_64 rng(73);
  std::uniform_int_distribution<Symbol> sym(0, 3);
  // Sizes straddle the dispatch cutoff.
  const std::size_t sizes[] = {0, 1, 100, 4096, 40000, 70000};
  for (const std::size_t size : sizes) {
    std::vector<Symbol> buf(size);
    for (auto& s : buf) s = sym(rng);
    const std::span<const Symbol> view(buf);
    for (const std::uint32_t n : {1u, 2u, 5u}) {
      const auto serial = scan::factor_set_serial(view, n);
      CHECK(scan::factor_set_parallel(view, n) == serial);
      CHECK(scan::factor_set(view, n) == serial);

      // Random membership set built from about half the observed windows.
      std::set<Word> ok;
      for (const Word& w : serial)
        if (rng() % 2 == 0) ok.insert(w);
      const auto a = scan::first_window_not_in_serial(view, n, ok);
      const auto b = scan::first_window_not_in_parallel(view, n, ok);
      CHECK(a == b);
      CHECK(scan::first_window_not_in(view, n, ok) == a);
    }
  }
}

TEST_CASE("first-violation scan finds the earliest window") {
  const std::vector<Symbol> buf = {0, 0, 1, 0, 0};
  const std::set<Word> zeros = {{0, 0}};
  CHECK(scan::first_window_not_in_serial(buf, 2, zeros) == 1);
  CHECK(scan::first_window_not_in_parallel(buf, 2, zeros) == 1);
  const std::set<Word> all = {{0, 0}, {0, 1}, {1, 0}};
  CHECK(!scan::first_window_not_in_serial(buf, 2, all).has_value());
}
