#include "shiftlab/demos.hpp"

#include <random>

#include "shiftlab/errors.hpp"
#include "shiftlab/json_io.hpp"
#include "shiftlab/omega.hpp"
#include "shiftlab/shadowing.hpp"
#include "shiftlab/subshift.hpp"
#include "shiftlab/transitivity.hpp"

namespace shiftlab::demos {

namespace {

struct Report {
  json assertions = json::array();
  json notes = json::array();
  bool pass = true;

  void check(const std::string& name, bool ok, json detail = nullptr) {
    json a{{"name", name}, {"pass", ok}};
    if (!detail.is_null()) a["detail"] = std::move(detail);
    assertions.push_back(std::move(a));
    pass = pass && ok;
  }
};

json words_to_json(const std::set<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(format_word(w));
  return out;
}

Point ep(Word pre, Word per) {
  return Point::eventually_periodic(std::move(pre), std::move(per));
}

SetPresentation zero_one_set() {
  return SetPresentation::finite({ep({}, {0}), ep({}, {1})});
}

// --- remark1 ---------------------------------------------------------------

json demo_remark1() {
  Report r;
  const Point x = Point::remark1();
  const SetPresentation Z = zero_one_set();
  const std::uint64_t t0 = 64;
  const std::uint32_t levels = 4;

  for (std::uint32_t n = 1; n <= 3; ++n) {
    const OmegaApprox approx = omega_prefixes(x, n, t0, levels);
    const std::set<Word> expected = z_prefixes(Z, n);
    r.check("omega-prefixes depth " + std::to_string(n), approx.prefixes == expected,
            json{{"computed", words_to_json(approx.prefixes)},
                 {"expected", words_to_json(expected)}});
  }
  r.check("limit set is closed and invariant", check_closed_invariant(Z));
  r.check("limit set is not chain transitive at delta 2^-1",
          !is_ict(Z, Dyadic::pow2_neg(1), 8));
  const OmegaApprox seq = sequence_omega_prefixes(OrbitStream(x), 2, t0, levels);
  r.check("orbit-stream limit matches the point limit",
          seq.prefixes == z_prefixes(Z, 2));
  return json{{"demo", "remark1"},
              {"parameters", json{{"t0", t0}, {"levels", levels}}},
              {"assertions", r.assertions},
              {"pass", r.pass}};
}

// --- remark2 ---------------------------------------------------------------

json demo_remark2() {
  Report r;
  const Point x = Point::remark2();
  const SetPresentation family = SetPresentation::remark2_family();

  const OmegaApprox approx = omega_prefixes(x, 3, 64, 4);
  const std::set<Word> expected = z_prefixes(family, 3);
  r.check("omega-prefixes depth 3", approx.prefixes == expected,
          json{{"computed", words_to_json(approx.prefixes)},
               {"expected", words_to_json(expected)}});
  r.check("family equality at depth 3", omega_equals(x, family, 3, 64, 4));

  // Truncated family: 0^inf plus 0^k 1^inf for k <= 8.
  std::vector<Point> pts = {ep({}, {0})};
  for (std::uint32_t k = 0; k <= 8; ++k) pts.push_back(ep(Word(k, 0), {1}));
  const SetPresentation trunc = SetPresentation::finite(std::move(pts));
  const Point pivot = ep({0}, {1});
  const auto back = find_return_chain(trunc, pivot, Dyadic::pow2_neg(2), 20);
  r.check("no return chain through 0 1^inf at delta 2^-2", !back.has_value(),
          json{{"max_len", 20}});
  return json{{"demo", "remark2"},
              {"parameters", json{{"t0", 64}, {"levels", 4}, {"truncation", 8}}},
              {"assertions", r.assertions},
              {"pass", r.pass}};
}

// --- monotone ----------------------------------------------------------------

// Random weakly decreasing word over 0..15 of the given length.
Word random_monotone_word(std::mt19937_64& rng, std::size_t len) {
  Word w;
  w.reserve(len);
  Symbol cur = 15;
  std::uniform_int_distribution<int> move(0, 9);
  for (std::size_t i = 0; i < len; ++i) {
    const int m = move(rng);
    if (m < 3 && cur > 0) cur -= 1;
    else if (m == 3 && cur > 2) cur -= 3;
    w.push_back(cur);
  }
  return w;
}

json demo_monotone() {
  Report r;
  RuleBasis rule;
  const Subshift shift = Subshift::validate(rule);
  r.check("validated as bounded type", shift.is_sbt());
  r.check("not finite type", !shift.is_sft());
  r.check("gluing bound is 1", shift.gluing_bound() == 1);

  // Shadowing suite: random verified pseudo-orbits, synthesized and checked.
  std::mt19937_64 rng(0x5EED0001ull);
  std::uniform_int_distribution<std::uint32_t> pick_m(2, 6);
  std::uniform_int_distribution<std::size_t> pick_len(2, 50);
  std::size_t ok = 0;
  const std::size_t cases = 500;
  for (std::size_t c = 0; c < cases; ++c) {
    const std::uint32_t M = pick_m(rng);
    const std::size_t len = pick_len(rng);
    const Word track = random_monotone_word(rng, len + M + 1);
    PseudoOrbit po;
    po.delta = Dyadic::pow2_neg(M - 1);
    for (std::size_t i = 0; i < len; ++i)
      po.points.push_back(ep(Word(track.begin() + static_cast<std::ptrdiff_t>(i),
                                  track.begin() + static_cast<std::ptrdiff_t>(i + M + 1)),
                             {track[i + M]}));
    if (verify_pseudo_orbit(po, 256)) continue;
    const Point z = synthesize_shadow(shift, po, 256);
    const bool member = shift.contains(z, 256).value;
    const bool shadowed = !verify_shadow(z, po, po.delta).has_value();
    if (member && shadowed) ++ok;
  }
  r.check("shadowing suite", ok == cases,
          json{{"cases", cases}, {"passed", ok}, {"seed", "0x5EED0001"}});

  // No chain climbs: a^inf cannot reach (a+1)^inf.
  bool chains_absent = true;
  for (Symbol a = 0; a <= 4; ++a) {
    const Point lo = ep({}, {a});
    const Point hi = ep({}, {a + 1});
    const SetPresentation Z = SetPresentation::finite({lo, hi});
    if (find_delta_chain(Z, lo, hi, Dyadic::pow2_neg(1), 8)) chains_absent = false;
  }
  r.check("no delta-chain from a^inf to (a+1)^inf at delta 2^-1", chains_absent);

  // Forward orbits stay below their initial symbol.
  std::uniform_int_distribution<std::size_t> pre_len(0, 24);
  bool confined = true;
  for (std::size_t t = 0; t < 50; ++t) {
    const Word w = random_monotone_word(rng, pre_len(rng) + 1);
    const Point x = ep(Word(w.begin(), w.end() - 1), {w.back()});
    if (!shift.contains(x, 1200).value) confined = false;
    const Symbol head = x.at(0);
    for (std::uint64_t i = 0; i < 1024; ++i)
      if (x.at(i) > head) confined = false;
  }
  r.check("orbit confinement to horizon 2^10", confined, json{{"points", 50}});

  json out{{"demo", "monotone"},
           {"parameters",
            json{{"alphabet_bound", rule.alphabet_bound},
                 {"direction", "non-increasing"},
                 {"seed", "0x5EED0001"}}},
           {"assertions", r.assertions},
           {"pass", r.pass}};
  out["notes"] = json::array(
      {"the built-in rule forbids rises s<t; the printed variant (forbid falls) "
       "is available via direction=non-decreasing"});
  return out;
}

// --- dichotomy-finite --------------------------------------------------------

json demo_dichotomy_finite() {
  Report r;
  ExplicitBasis basis;
  basis.words = {{0, 1}, {2}, {3}};
  basis.alphabet = std::vector<Symbol>{0, 1, 2, 3};
  const Subshift shift = Subshift::validate(std::move(basis));
  r.check("validated as finite type", shift.is_sft());
  r.check("bounded type as well", shift.is_sbt());
  r.check("forbidden pair is globally disallowed",
          !shift.globally_allowed({0, 1}).value);
  r.check("reversed pair is globally allowed", shift.globally_allowed({1, 0}).value);
  r.check("fixed points are not chain transitive at delta 2^-1",
          !is_ict(zero_one_set(), Dyadic::pow2_neg(1), 8));
  return json{{"demo", "dichotomy-finite"},
              {"parameters", json{{"alphabet", {0, 1, 2, 3}}}},
              {"assertions", r.assertions},
              {"pass", r.pass}};
}

// --- sbt-ict -----------------------------------------------------------------

std::vector<std::pair<std::string, SetPresentation>> ict_set_list() {
  std::vector<std::pair<std::string, SetPresentation>> out;
  out.emplace_back("{0^inf}", SetPresentation::finite({ep({}, {0})}));
  out.emplace_back("{(01)^inf,(10)^inf}",
                   SetPresentation::finite({ep({}, {0, 1}), ep({}, {1, 0})}));
  out.emplace_back("3-cycle of (001)^inf",
                   SetPresentation::finite({ep({}, {0, 0, 1}), ep({}, {0, 1, 0}),
                                            ep({}, {1, 0, 0})}));
  return out;
}

std::vector<std::pair<std::string, Subshift>> host_shifts() {
  std::vector<std::pair<std::string, Subshift>> out;
  out.emplace_back("full shift", Subshift::validate(ExplicitBasis{}));
  ExplicitBasis one;
  one.words = {{2, 1}};
  out.emplace_back("sft forbidding [2 1]", Subshift::validate(std::move(one)));
  return out;
}

json demo_sbt_ict() {
  Report r;
  const std::uint64_t horizon = 1 << 12;
  const Dyadic eps = Dyadic::pow2_neg(6);
  std::vector<Dyadic> ladder;
  for (std::uint32_t m = 0; m <= 6; ++m) ladder.push_back(Dyadic::pow2_neg(m));

  for (const auto& [shift_name, shift] : host_shifts()) {
    for (const auto& [set_name, Z] : ict_set_list()) {
      const std::string tag = shift_name + " / " + set_name;
      r.check(tag + ": chain transitive at every rung", ict_certified(Z));
      auto apo = ict_to_apo(Z, ladder);
      const Point x = synthesize_asymptotic_shadow(shift, apo, horizon);
      r.check(tag + ": realized point in the subshift",
              shift.contains(x, horizon).value);
      bool omega_ok = true;
      for (std::uint32_t n = 1; n <= 3; ++n)
        omega_ok = omega_ok && omega_equals(x, Z, n, 64, 4);
      r.check(tag + ": omega prefixes match at depths 1..3", omega_ok);
      const std::uint64_t N =
          apo->rate(6 + std::max<std::uint32_t>(shift.max_basis_length(), 1));
      r.check(tag + ": attracting at eps 2^-6",
              !attracting_check(x, Z, eps, N, horizon).has_value(),
              json{{"from", N}, {"horizon", horizon}});
      r.check(tag + ": asymptotic shadow bound",
              !verify_asymptotic_shadow(x, *apo, shift, 6, 1 << 10).has_value());
    }
  }
  return json{{"demo", "sbt-ict"},
              {"parameters",
               json{{"eps", eps.str()}, {"horizon", horizon}, {"t0", 64}, {"levels", 4}}},
              {"assertions", r.assertions},
              {"pass", r.pass}};
}

// --- sft-realize ---------------------------------------------------------------

json demo_sft_realize() {
  Report r;
  const std::uint64_t horizon = 1 << 12;
  auto sets = ict_set_list();
  sets.emplace_back("{0^inf,1^inf} (not chain transitive)", zero_one_set());

  for (const auto& [shift_name, shift] : host_shifts()) {
    for (const auto& [set_name, Z] : sets) {
      const std::string tag = shift_name + " / " + set_name;
      r.check(tag + ": closed and invariant", check_closed_invariant(Z));
      const Point x = realize_invariant_sft(shift, Z, horizon);
      r.check(tag + ": realized point in the subshift",
              shift.contains(x, horizon).value);
      bool omega_ok = true;
      for (std::uint32_t n = 1; n <= 4; ++n)
        omega_ok = omega_ok && omega_equals(x, Z, n, 64, 4);
      r.check(tag + ": omega prefixes match at depths 1..4", omega_ok);
    }
  }
  r.check("the non-chain-transitive set really is not chain transitive",
          !is_ict(zero_one_set(), Dyadic::pow2_neg(1), 8));
  return json{{"demo", "sft-realize"},
              {"parameters", json{{"horizon", horizon}, {"t0", 64}, {"levels", 4}}},
              {"assertions", r.assertions},
              {"pass", r.pass}};
}

}  // namespace

const std::vector<std::string>& demo_names() {
  static const std::vector<std::string> names = {
      "remark1", "remark2", "monotone", "dichotomy-finite", "sbt-ict", "sft-realize"};
  return names;
}

json run_demo(const std::string& name) {
  if (name == "remark1") return demo_remark1();
  if (name == "remark2") return demo_remark2();
  if (name == "monotone") return demo_monotone();
  if (name == "dichotomy-finite") return demo_dichotomy_finite();
  if (name == "sbt-ict") return demo_sbt_ict();
  if (name == "sft-realize") return demo_sft_realize();
  throw SpecError("unknown demo: \"" + name + "\"");
}

}  // namespace shiftlab::demos
