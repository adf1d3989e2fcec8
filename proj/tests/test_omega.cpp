#include <random>

#include "doctest.h"
#include "shiftlab/errors.hpp"
#include "shiftlab/omega.hpp"
#include "shiftlab/shadowing.hpp"

using namespace shiftlab;

namespace {

Point ep(Word pre, Word per) {
  return Point::eventually_periodic(std::move(pre), std::move(per));
}

std::set<Word> words(std::initializer_list<Word> ws) { return std::set<Word>(ws); }

}  // namespace

TEST_CASE("factor sets") {
  CHECK(factor_set(ep({}, {0, 1}), 2, 0, 10) == words({{0, 1}, {1, 0}}));
  CHECK(factor_set(Point::remark1(), 1, 0, 5) == words({{0}, {2}, {1}, {3}}));
  CHECK(factor_set(ep({}, {0}), 3, 0, 10) == words({{0, 0, 0}}));
  CHECK_THROWS_AS(factor_set(ep({}, {0}), 3, 8, 10), PreconditionError);
}

TEST_CASE("omega prefixes of the counterexample schemes") {
  const OmegaApprox a = omega_prefixes(Point::remark1(), 2, 64, 4);
  CHECK(a.prefixes == words({{0, 0}, {1, 1}}));
  CHECK(a.exact);

  const OmegaApprox b = omega_prefixes(Point::remark2(), 3, 64, 4);
  CHECK(b.prefixes == words({{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));

  const OmegaApprox c = omega_prefixes(ep({0, 1, 2, 3}, {4}), 1, 8, 3);
  CHECK(c.prefixes == words({{4}}));
  CHECK(c.exact);

  // Depth-1 ladders also shed the separators.
  CHECK(omega_prefixes(Point::remark1(), 1, 64, 4).prefixes == words({{0}, {1}}));
}

TEST_CASE("sequence omega prefixes") {
  const ConstantStream constant(ep({}, {0}));
  CHECK(sequence_omega_prefixes(constant, 3, 64, 3).prefixes == words({{0, 0, 0}}));

  const auto apo = ict_to_apo(
      SetPresentation::finite({ep({}, {0, 1}), ep({}, {1, 0})}), {Dyadic::pow2_neg(3)});
  CHECK(sequence_omega_prefixes(*apo, 2, 64, 3).prefixes == words({{0, 1}, {1, 0}}));

  const OrbitStream orbit(Point::remark1());
  CHECK(sequence_omega_prefixes(orbit, 2, 64, 4).prefixes == words({{0, 0}, {1, 1}}));
}

TEST_CASE("set prefixes") {
  CHECK(z_prefixes(SetPresentation::finite({ep({}, {0}), ep({}, {1})}), 2) ==
        words({{0, 0}, {1, 1}}));
  CHECK(z_prefixes(SetPresentation::remark2_family(), 3) ==
        words({{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}));
  CHECK(z_prefixes(SetPresentation::finite({ep({}, {0, 1}), ep({}, {1, 0})}), 3) ==
        words({{0, 1, 0}, {1, 0, 1}}));

  const SetPresentation oracle = SetPresentation::prefix_oracle(
      [](std::uint32_t n) { return std::set<Word>{Word(n, 7)}; });
  CHECK(z_prefixes(oracle, 2) == words({{7, 7}}));
}

TEST_CASE("attracting checks") {
  const SetPresentation ones = SetPresentation::finite({ep({}, {1})});
  CHECK(!attracting_check(ep({0, 0, 0}, {1}), ones, Dyadic::pow2_neg(3), 3, 100)
             .has_value());
  CHECK(attracting_check(ep({0, 0, 0}, {1}), ones, Dyadic::pow2_neg(3), 0, 100) == 0);

  const SetPresentation fixed =
      SetPresentation::finite({ep({}, {0}), ep({}, {1})});
  const auto bad =
      attracting_check(Point::remark1(), fixed, Dyadic::pow2_neg(1), 0, 10000);
  REQUIRE(bad.has_value());
  CHECK(*bad == 0);  // the first separator already breaks the 2-prefix

  CHECK_THROWS_AS(attracting_check(ep({}, {0}), ones, Dyadic::pow2_neg(1), 5, 5),
                  PreconditionError);
}

TEST_CASE("omega equality") {
  const SetPresentation fixed =
      SetPresentation::finite({ep({}, {0}), ep({}, {1})});
  CHECK(omega_equals(Point::remark1(), fixed, 2, 64, 4));
  CHECK(omega_equals(Point::remark2(), SetPresentation::remark2_family(), 3, 64, 4));
  CHECK(!omega_equals(ep({}, {0}), SetPresentation::finite({ep({}, {1})}), 1, 8, 2));
}

TEST_CASE("subsequence monotonicity on the built-in streams") {
  std::vector<std::shared_ptr<const PointStream>> pool;
  pool.push_back(std::make_shared<const OrbitStream>(Point::remark1()));
  pool.push_back(std::make_shared<const OrbitStream>(Point::remark2()));
  pool.push_back(std::make_shared<const OrbitStream>(ep({3, 1}, {0, 1, 2})));
  pool.push_back(std::make_shared<const ConstantStream>(ep({}, {5})));
  pool.push_back(ict_to_apo(
      SetPresentation::finite({ep({}, {0, 1}), ep({}, {1, 0})}), {Dyadic::pow2_neg(2)}));

  std::mt19937_64 rng(71);
  const std::uint64_t strides[] = {1, 2, 3, 5, 8};
  std::uniform_int_distribution<std::uint64_t> offset(0, 15);
  for (const auto& stream : pool)
    for (std::uint64_t a : strides)
      for (int t = 0; t < 3; ++t) {
        const SubsampleStream sub(stream, a, offset(rng));
        for (std::uint32_t n = 1; n <= 3; ++n) {
          const auto big = sequence_omega_prefixes(*stream, n, 64, 3).prefixes;
          const auto small = sequence_omega_prefixes(sub, n, 64, 3).prefixes;
          CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
        }
      }
}

TEST_CASE("asymptotic shadows preserve sequence limits") {
  const Subshift full = Subshift::validate(ExplicitBasis{});
  std::vector<std::shared_ptr<const AsymptoticPseudoOrbit>> apos;
  apos.push_back(ict_to_apo(
      SetPresentation::finite({ep({}, {0, 1}), ep({}, {1, 0})}), {Dyadic::pow2_neg(2)}));
  apos.push_back(ict_to_apo(SetPresentation::finite({ep({}, {0})}), {}));
  apos.push_back(std::make_shared<const SplicedOrbitStream>(
      std::vector<Point>{ep({0, 5}, {0})}, ep({}, {0})));

  for (const auto& apo : apos) {
    const Point z = synthesize_asymptotic_shadow(full, apo, 1 << 10);
    const OrbitStream orbit(z);
    for (std::uint32_t n = 1; n <= 3; ++n)
      CHECK(sequence_omega_prefixes(*apo, n, 64, 4).prefixes ==
            sequence_omega_prefixes(orbit, n, 64, 4).prefixes);
  }
}

TEST_CASE("ladder stability") {
  // Doubling the start or the level count never enlarges the reported set.
  const std::vector<Point> schemes = {Point::remark1(), Point::remark2()};
  for (const Point& x : schemes)
    for (std::uint32_t n = 1; n <= 3; ++n) {
      const auto base = omega_prefixes(x, n, 64, 3).prefixes;
      const auto wider = omega_prefixes(x, n, 128, 3).prefixes;
      const auto deeper = omega_prefixes(x, n, 64, 5).prefixes;
      CHECK(std::includes(base.begin(), base.end(), wider.begin(), wider.end()));
      CHECK(std::includes(base.begin(), base.end(), deeper.begin(), deeper.end()));
    }

  // Constant across ladders for eventually periodic points.
  const Point x = ep({9, 4}, {2, 7});
  const auto a = omega_prefixes(x, 2, 64, 3).prefixes;
  const auto b = omega_prefixes(x, 2, 128, 6).prefixes;
  CHECK(a == b);
  CHECK(a == words({{2, 7}, {7, 2}}));
}

TEST_CASE("ladder on eventually periodic symbols matches the closed form") {
  // Route an eventually periodic word through the raw ladder by wrapping it
  // in a concat scheme over a scheme tail shifted into periodicity.
  const Point x = ep({8, 3}, {1, 4});
  const Point wrapped = Point::concat({8, 3}, Point::from_scheme(
      std::make_shared<const ShiftedScheme>(ep({}, {1, 4}), 0)));
  const auto exact = omega_prefixes(x, 2, 64, 3);
  const auto laddered = omega_prefixes(wrapped, 2, 64, 3);
  CHECK(exact.exact);
  CHECK(!laddered.exact);
  CHECK(exact.prefixes == laddered.prefixes);
}
