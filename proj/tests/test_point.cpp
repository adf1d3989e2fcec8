#include <map>
#include <numeric>
#include <random>

#include "doctest.h"
#include "shiftlab/errors.hpp"
#include "shiftlab/point.hpp"
#include "shiftlab/scan.hpp"

using namespace shiftlab;

namespace {

Point ep(Word pre, Word per) {
  return Point::eventually_periodic(std::move(pre), std::move(per));
}

Point random_ep(std::mt19937_64& rng, Symbol max_sym = 3) {
  std::uniform_int_distribution<std::size_t> pre_len(0, 4);
  std::uniform_int_distribution<std::size_t> per_len(1, 4);
  std::uniform_int_distribution<Symbol> sym(0, max_sym);
  Word pre(pre_len(rng)), per(per_len(rng));
  for (auto& s : pre) s = sym(rng);
  for (auto& s : per) s = sym(rng);
  return ep(std::move(pre), std::move(per));
}

}  // namespace

TEST_CASE("eventually periodic normal forms") {
  const Point a = ep({}, {0});
  CHECK(a.preperiod().empty());
  CHECK(a.period() == Word{0});

  const Point b = ep({0}, {1, 1});
  CHECK(b.preperiod() == Word{0});
  CHECK(b.period() == Word{1});

  const Point c = ep({0, 1}, {0, 1});
  CHECK(c.preperiod().empty());
  CHECK(c.period() == Word{0, 1});

  CHECK(ep_equal(ep({0, 0}, {0}), a));
  CHECK(!ep_equal(ep({}, {0, 1}), ep({}, {1, 0})));
  CHECK(!ep_equal(ep({0}, {1}), ep({}, {1})));
  CHECK_THROWS_AS(ep({}, {}), SpecError);
}

TEST_CASE("scheme points spell the displayed words") {
  const Point r1 = Point::remark1();
  const Word want1 = {0, 2, 1, 1, 3, 0, 0, 0};
  for (std::size_t i = 0; i < want1.size(); ++i) CHECK(r1.at(i) == want1[i]);

  const Point r2 = Point::remark2();
  const Word want2 = {0, 1, 2, 0, 0, 1};
  for (std::size_t i = 0; i < want2.size(); ++i) CHECK(r2.at(i) == want2[i]);

  CHECK(ep({}, {0, 1}).at(5) == 1);
}

TEST_CASE("remark1 block structure") {
  // Blocks 1..44 fit inside k(k+3)/2 evaluated at 44.
  const std::uint64_t span = 44 * 47 / 2;
  const auto buf = scan::materialize(Point::remark1(), 0, span);

  // Runs of 0s have the odd lengths, runs of 1s the even lengths.
  std::map<std::pair<Symbol, std::uint64_t>, int> runs;
  std::map<Symbol, int> separators;
  std::uint64_t i = 0;
  while (i < buf.size()) {
    const Symbol s = buf[i];
    if (s >= 2) {
      separators[s] += 1;
      ++i;
      continue;
    }
    std::uint64_t j = i;
    while (j < buf.size() && buf[j] == s) ++j;
    runs[{s, j - i}] += 1;
    i = j;
  }
  for (std::uint64_t k = 0; k <= 20; ++k) {
    CHECK(runs.count({0, 2 * k + 1}) == 1);
    CHECK(runs.count({1, 2 * k + 2}) == 1);
  }
  for (Symbol s = 2; s <= 45; ++s) CHECK(separators[s] == 1);
  for (const auto& [sym, count] : separators) {
    CHECK(sym <= 45);
    CHECK(count == 1);
  }
}

TEST_CASE("shift action") {
  CHECK(ep_equal(ep({0}, {1}).shifted(1), ep({}, {1})));
  CHECK(ep_equal(ep({}, {0, 1}).shifted(1), ep({}, {1, 0})));
  CHECK(Point::remark1().shifted(1).at(0) == 2);

  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::uint64_t> step(0, 9);
  const std::vector<Point> pool = {random_ep(rng), random_ep(rng), Point::remark1(),
                                   Point::remark2(),
                                   Point::concat({7, 8}, Point::remark2())};
  for (const Point& x : pool)
    for (int t = 0; t < 20; ++t) {
      const std::uint64_t a = step(rng), b = step(rng);
      const Point lhs = x.shifted(a).shifted(b);
      const Point rhs = x.shifted(a + b);
      for (std::uint64_t i = 0; i < 64; ++i) CHECK(lhs.at(i) == rhs.at(i));
    }
}

TEST_CASE("lcp and distance") {
  const Point zero = ep({}, {0});
  CHECK(lcp(zero, zero, 10).kind == LcpResult::Kind::infinite);
  CHECK(distance(zero, zero, 10).value == Dyadic::zero());

  const Point ab = ep({}, {0, 1});
  const Point ba = ep({}, {1, 0});
  CHECK(lcp(ab, ba, 10).value == 0);
  CHECK(distance(ab, ba, 10).value == Dyadic::one());

  const Point x = ep({0, 0}, {1});
  const Point y = ep({0, 0}, {0});
  const auto l = lcp(x, y, 10);
  CHECK(l.kind == LcpResult::Kind::finite);
  CHECK(l.value == 2);
  CHECK(distance(x, y, 10).value == Dyadic::pow2_neg(2));

  // Scheme pairs agreeing to the horizon yield a flagged upper bound.
  const auto far = distance(Point::remark1(), Point::remark1(), 10);
  CHECK(!far.exact);
  CHECK(far.value == Dyadic::pow2_neg(10));

  // Exact beyond any horizon for eventually periodic pairs.
  const auto deep = lcp(ep(Word(40, 5), {1}), ep(Word(40, 5), {2}), 4);
  CHECK(deep.kind == LcpResult::Kind::finite);
  CHECK(deep.value == 40);
}

TEST_CASE("metric laws on random eventually periodic points") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 300; ++t) {
    const Point x = random_ep(rng), y = random_ep(rng), z = random_ep(rng);
    const Dyadic dxy = distance(x, y, 64).value;
    const Dyadic dyx = distance(y, x, 64).value;
    CHECK(dxy == dyx);
    CHECK((dxy == Dyadic::zero()) == ep_equal(x, y));

    // Ultrametric inequality.
    const Dyadic dxz = distance(x, z, 64).value;
    const Dyadic dyz = distance(y, z, 64).value;
    CHECK(dxz <= std::max(dxy, dyz));

    // Convention: d < 2^-m iff lcp >= m+1.
    const LcpResult l = lcp(x, y, 64);
    for (std::uint32_t m = 0; m <= 8; ++m)
      CHECK((dxy < Dyadic::pow2_neg(m)) == l.at_least(m + 1));
  }
}

TEST_CASE("normal forms agree with pointwise comparison") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const Point x = random_ep(rng, 1), y = random_ep(rng, 1);
    const std::uint64_t horizon =
        std::max(x.preperiod().size(), y.preperiod().size()) +
        2 * std::lcm(x.period().size(), y.period().size());
    bool same = true;
    for (std::uint64_t i = 0; i < horizon; ++i)
      if (x.at(i) != y.at(i)) same = false;
    CHECK(ep_equal(x, y) == same);
  }
}

TEST_CASE("point literals") {
  CHECK(ep_equal(*parse_point("0 1|2 3"), ep({0, 1}, {2, 3})));
  CHECK(ep_equal(*parse_point("|0"), ep({}, {0})));
  CHECK(parse_point("remark1")->scheme().kind() == SchemeKind::remark1);
  CHECK(!parse_point("nonsense").has_value());
  CHECK(!parse_point("1|").has_value());

  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    const Point x = random_ep(rng, 9);
    const auto back = parse_point(format_point(x));
    REQUIRE(back.has_value());
    CHECK(ep_equal(*back, x));
  }
}

TEST_CASE("concat folds eventually periodic tails") {
  const Point folded = Point::concat({5, 4}, ep({3}, {2, 1}));
  CHECK(folded.is_eventually_periodic());
  CHECK(folded.preperiod() == Word{5, 4, 3});
  CHECK(folded.period() == Word{2, 1});

  const Point spliced = Point::concat({5}, Point::remark1());
  CHECK(!spliced.is_eventually_periodic());
  CHECK(spliced.at(0) == 5);
  CHECK(spliced.at(1) == 0);
  CHECK(spliced.at(2) == 2);
  // Shifting consumes the head and then reaches the tail itself.
  CHECK(spliced.shifted(1).scheme().kind() == SchemeKind::remark1);
}
