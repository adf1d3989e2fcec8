#include "shiftlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "shiftlab/demos.hpp"
#include "shiftlab/errors.hpp"
#include "shiftlab/json_io.hpp"
#include "shiftlab/omega.hpp"
#include "shiftlab/shadowing.hpp"
#include "shiftlab/subshift.hpp"
#include "shiftlab/transitivity.hpp"

namespace shiftlab::cli {

namespace {

using nlohmann::json;

Dyadic parse_dyadic_flag(const std::string& text, const char* flag) {
  auto d = Dyadic::parse(text);
  if (!d) throw SpecError(std::string(flag) + " expects a dyadic literal (1 or 2^-m)");
  return *d;
}

Point parse_point_flag(const std::string& text, const char* flag) {
  auto p = parse_point(text);
  if (!p) throw SpecError(std::string(flag) + " expects a point literal (PRE|PER, remark1, remark2)");
  return *p;
}

Word parse_word_flag(const std::string& text, const char* flag) {
  auto w = parse_word(text);
  if (!w) throw SpecError(std::string(flag) + " expects space-separated symbols");
  return *w;
}

struct Assertions {
  json list = json::array();
  bool pass = true;
  void add(const std::string& name, bool ok, json detail = nullptr) {
    json a{{"name", name}, {"pass", ok}};
    if (!detail.is_null()) a["detail"] = std::move(detail);
    list.push_back(std::move(a));
    pass = pass && ok;
  }
};

json words_json(const std::set<Word>& ws) {
  json out = json::array();
  for (const Word& w : ws) out.push_back(format_word(w));
  return out;
}

json chain_json(const DeltaChain& chain) {
  json entries = json::array();
  for (const Point& p : chain.entries) entries.push_back(point_to_json(p));
  return json{{"delta", chain.delta.str()}, {"entries", entries}};
}

// Exact step-defect table: the absence certificate for chain searches.
json defect_table(const std::vector<Point>& pts, Dyadic delta) {
  json rows = json::array();
  for (const Point& p : pts) {
    const Point img = p.shifted(1);
    json row = json::array();
    for (const Point& q : pts) {
      const Dyadic d = distance(img, q, 1).value;
      row.push_back(json{{"defect", d.str()}, {"edge", d < delta}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct CommandContext {
  std::string subshift_file;
  std::string po_file;
  std::string set_file;
  std::string from_lit;
  std::string to_lit;
  std::string point_lit;
  std::string word_lit;
  std::string u_lit;
  std::string w_lit;
  std::string v_lit;
  std::string delta_lit = "2^-1";
  std::string eps_lit = "2^-2";
  std::string mode = "ict";
  std::string demo_name;
  std::string json_path;
  std::uint64_t horizon = 1024;
  std::uint64_t t0 = 64;
  std::uint32_t depth = 2;
  std::uint32_t levels = 4;
  std::size_t max_len = 16;
  bool want_global = false;
};

Subshift load_subshift(const CommandContext& ctx) {
  if (ctx.subshift_file.empty()) throw SpecError("--subshift FILE is required");
  return subshift_from_json(load_json_file(ctx.subshift_file));
}

SetPresentation load_set(const CommandContext& ctx) {
  if (ctx.set_file.empty()) throw SpecError("--set FILE is required");
  return set_from_json(load_json_file(ctx.set_file));
}

RunResult cmd_check(const CommandContext& ctx) {
  const Subshift shift = load_subshift(ctx);
  Assertions a;
  json report{{"command", "check"},
              {"subshift", subshift_to_json(shift)},
              {"max_basis_length", shift.max_basis_length()},
              {"active_alphabet", shift.active_alphabet()},
              {"is_sft", shift.is_sft()},
              {"is_sbt", shift.is_sbt()},
              {"gluing_bound", shift.gluing_bound()}};
  if (!ctx.point_lit.empty()) {
    const Point x = parse_point_flag(ctx.point_lit, "--point");
    const MembershipResult m = shift.contains(x, std::max<std::uint64_t>(ctx.horizon, shift.max_basis_length()));
    report["point"] = point_to_json(x);
    report["membership"] =
        json{{"value", m.value}, {"exact", m.exact}, {"horizon", ctx.horizon}};
    a.add("point in subshift", m.value,
          m.value ? json(nullptr) : json{{"violation_at", m.violation}});
  }
  report["assertions"] = a.list;
  report["pass"] = a.pass;
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_allowed(const CommandContext& ctx) {
  const Subshift shift = load_subshift(ctx);
  const Word w = parse_word_flag(ctx.word_lit, "--word");
  const bool local = shift.locally_allowed(w);
  const GlobalAnswer global = shift.globally_allowed(w);
  Assertions a;
  a.add(ctx.want_global ? "globally allowed" : "locally allowed",
        ctx.want_global ? global.value : local);
  json report{{"command", "allowed"},
              {"word", format_word(w)},
              {"local", local},
              {"global", json{{"value", global.value}, {"certified", global.certified}}},
              {"assertions", a.list},
              {"pass", a.pass}};
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_glue(const CommandContext& ctx) {
  const Subshift shift = load_subshift(ctx);
  const Word u = parse_word_flag(ctx.u_lit, "--u");
  const Word w = parse_word_flag(ctx.w_lit, "--w");
  const Word v = parse_word_flag(ctx.v_lit, "--v");
  const std::uint32_t bound = shift.gluing_bound();
  const bool holds = shift.verify_gluing(u, w, v);
  Assertions a;
  a.add("gluing implication instance", holds);
  json report{{"command", "glue"},
              {"gluing_bound", bound},
              {"u", format_word(u)},
              {"w", format_word(w)},
              {"v", format_word(v)},
              {"premise_uw", shift.globally_allowed(concat_words(u, w)).value},
              {"premise_wv", shift.globally_allowed(concat_words(w, v)).value},
              {"conclusion_uwv",
               shift.globally_allowed(concat_words(concat_words(u, w), v)).value},
              {"assertions", a.list},
              {"pass", a.pass}};
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_shadow(const CommandContext& ctx) {
  const Subshift shift = load_subshift(ctx);
  if (ctx.po_file.empty()) throw SpecError("--po FILE is required");
  PseudoOrbit po = pseudo_orbit_from_json(load_json_file(ctx.po_file));
  const Dyadic eps = parse_dyadic_flag(ctx.eps_lit, "--eps");
  const ShadowingModulus mod = shadowing_modulus(shift, eps);
  // The synthesis contract needs steps within the modulus delta; tighten the
  // claimed bound when the file's is looser.
  const Dyadic effective = po.delta < mod.delta ? po.delta : mod.delta;
  po.delta = effective;

  Assertions a;
  const auto bad_step = verify_pseudo_orbit(po, ctx.horizon);
  a.add("pseudo-orbit verified at delta " + effective.str(), !bad_step.has_value(),
        bad_step ? json{{"violation_at", *bad_step}} : json(nullptr));
  json report{{"command", "shadow"},
              {"modulus", json{{"overlap", mod.overlap}, {"delta", mod.delta.str()}}},
              {"eps", eps.str()},
              {"delta", effective.str()},
              {"horizon", ctx.horizon}};
  if (!bad_step) {
    const Point z = synthesize_shadow(shift, po, ctx.horizon);
    report["shadow_point"] = point_to_json(z);
    a.add("shadow point in subshift", shift.contains(z, std::max<std::uint64_t>(ctx.horizon, shift.max_basis_length())).value);
    const auto miss = verify_shadow(z, po, eps);
    a.add("orbit eps-shadows the pseudo-orbit", !miss.has_value(),
          miss ? json{{"violation_at", *miss}} : json(nullptr));
  }
  report["assertions"] = a.list;
  report["pass"] = a.pass;
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_chain(const CommandContext& ctx) {
  const Point from = parse_point_flag(ctx.from_lit, "--from");
  const Point to = parse_point_flag(ctx.to_lit, "--to");
  const Dyadic delta = parse_dyadic_flag(ctx.delta_lit, "--delta");
  SetPresentation Z = [&] {
    if (!ctx.set_file.empty()) return load_set(ctx);
    if (ep_equal(from, to)) return SetPresentation::finite({from});
    return SetPresentation::finite({from, to});
  }();

  json report{{"command", "chain"},
              {"from", point_to_json(from)},
              {"to", point_to_json(to)},
              {"delta", delta.str()},
              {"max_len", ctx.max_len},
              {"set", set_to_json(Z)}};
  if (!ctx.subshift_file.empty()) {
    const Subshift shift = load_subshift(ctx);
    json memb = json::array();
    for (const Point& p : Z.points())
      memb.push_back(json{{"point", point_to_json(p)},
                          {"in_subshift", shift.contains(p, std::max<std::uint64_t>(ctx.horizon, shift.max_basis_length())).value}});
    report["membership"] = memb;
  }

  Assertions a;
  const auto chain = find_delta_chain(Z, from, to, delta, ctx.max_len);
  a.add("delta-chain exists", chain.has_value());
  if (chain) {
    report["chain"] = chain_json(*chain);
  } else {
    report["chain"] = nullptr;
    report["absence_certificate"] =
        json{{"kind", "exhaustive BFS over the finite presentation"},
             {"defects", defect_table(Z.points(), delta)}};
  }
  report["assertions"] = a.list;
  report["pass"] = a.pass;
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_ict(const CommandContext& ctx) {
  const SetPresentation Z = load_set(ctx);
  const Dyadic delta = parse_dyadic_flag(ctx.delta_lit, "--delta");
  Assertions a;
  const bool ict = is_ict(Z, delta, ctx.max_len);
  a.add("internally chain transitive at delta " + delta.str(), ict);
  json report{{"command", "ict"},
              {"delta", delta.str()},
              {"max_len", ctx.max_len},
              {"set", set_to_json(Z)},
              {"ict", ict},
              {"certified_all_delta", ict_certified(Z)},
              {"assertions", a.list}};
  report["pass"] = a.pass;
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_realize(const CommandContext& ctx) {
  const Subshift shift = load_subshift(ctx);
  const SetPresentation Z = load_set(ctx);
  Assertions a;
  json report{{"command", "realize"},
              {"mode", ctx.mode},
              {"set", set_to_json(Z)},
              {"horizon", ctx.horizon},
              {"t0", ctx.t0},
              {"levels", ctx.levels}};
  Point x = [&] {
    if (ctx.mode == "ict") return realize_ict(shift, Z, ctx.horizon);
    if (ctx.mode == "sft") return realize_invariant_sft(shift, Z, ctx.horizon);
    throw SpecError("--mode must be ict or sft");
  }();
  report["point"] = point_to_json(x);
  a.add("realized point in subshift", shift.contains(x, std::max<std::uint64_t>(ctx.horizon, shift.max_basis_length())).value);
  const std::uint32_t maxdepth = std::max<std::uint32_t>(ctx.depth, 1);
  for (std::uint32_t n = 1; n <= maxdepth; ++n) {
    const OmegaApprox approx = omega_prefixes(x, n, ctx.t0, ctx.levels);
    const std::set<Word> expected = z_prefixes(Z, n);
    a.add("omega prefixes equal set prefixes at depth " + std::to_string(n),
          approx.prefixes == expected,
          json{{"computed", words_json(approx.prefixes)},
               {"expected", words_json(expected)}});
  }
  if (ctx.mode == "ict") {
    const Dyadic eps = Dyadic::pow2_neg(6);
    const auto apo = ict_to_apo(Z, {Dyadic::one(), Dyadic::pow2_neg(3), Dyadic::pow2_neg(6)});
    const std::uint64_t N =
        apo->rate(6 + std::max<std::uint32_t>(shift.max_basis_length(), 1));
    const auto bad = attracting_check(x, Z, eps, N, ctx.horizon);
    a.add("attracting at eps 2^-6", !bad.has_value(),
          bad ? json{{"violation_at", *bad}} : json(nullptr));
  }
  report["assertions"] = a.list;
  report["pass"] = a.pass;
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_omega(const CommandContext& ctx) {
  const Point x = parse_point_flag(ctx.point_lit, "--point");
  const OmegaApprox approx = omega_prefixes(x, ctx.depth, ctx.t0, ctx.levels);
  Assertions a;
  json report{{"command", "omega"},
              {"point", point_to_json(x)},
              {"report",
               json{{"depth", approx.depth},
                    {"prefixes", words_json(approx.prefixes)},
                    {"ladder", json{{"t0", approx.t0}, {"levels", approx.levels}}},
                    {"exact", approx.exact}}}};
  if (!ctx.set_file.empty()) {
    const SetPresentation Z = load_set(ctx);
    const std::set<Word> expected = z_prefixes(Z, ctx.depth);
    a.add("omega prefixes equal set prefixes", approx.prefixes == expected,
          json{{"expected", words_json(expected)}});
  }
  report["assertions"] = a.list;
  report["pass"] = a.pass;
  return {a.pass ? 0 : 1, report};
}

RunResult cmd_demo(const CommandContext& ctx) {
  json report = demos::run_demo(ctx.demo_name);
  const bool pass = report.at("pass").get<bool>();
  return {pass ? 0 : 1, report};
}

void emit(const RunResult& result, const std::string& json_path) {
  if (json_path.empty()) {
    std::cout << result.report.dump(2) << "\n";
    return;
  }
  std::ofstream out(json_path);
  if (!out) throw SpecError("cannot write report to " + json_path);
  out << result.report.dump(2) << "\n";
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  CommandContext ctx;
  CLI::App app{"shiftlab — subshift dynamics over countable alphabets"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json", ctx.json_path, "write the JSON report to this path");
    cmd->add_option("--horizon", ctx.horizon, "finite verification horizon");
  };

  CLI::App* check = app.add_subcommand("check", "validate a subshift spec; optionally test a point");
  check->add_option("--subshift", ctx.subshift_file)->required();
  check->add_option("--point", ctx.point_lit);
  add_common(check);

  CLI::App* allowed = app.add_subcommand("allowed", "local/global admissibility of a word");
  allowed->add_option("--subshift", ctx.subshift_file)->required();
  allowed->add_option("--word", ctx.word_lit)->required();
  allowed->add_flag("--global", ctx.want_global, "gate the exit code on the global answer");
  add_common(allowed);

  CLI::App* glue = app.add_subcommand("glue", "check a gluing implication instance");
  glue->add_option("--subshift", ctx.subshift_file)->required();
  glue->add_option("--u", ctx.u_lit)->required();
  glue->add_option("--w", ctx.w_lit)->required();
  glue->add_option("--v", ctx.v_lit)->required();
  add_common(glue);

  CLI::App* shadow = app.add_subcommand("shadow", "synthesize and verify a shadowing point");
  shadow->add_option("--subshift", ctx.subshift_file)->required();
  shadow->add_option("--po", ctx.po_file)->required();
  shadow->add_option("--eps", ctx.eps_lit);
  add_common(shadow);

  CLI::App* chain = app.add_subcommand("chain", "search for a delta-chain inside a set");
  chain->add_option("--subshift", ctx.subshift_file);
  chain->add_option("--set", ctx.set_file);
  chain->add_option("--from", ctx.from_lit)->required();
  chain->add_option("--to", ctx.to_lit)->required();
  chain->add_option("--delta", ctx.delta_lit);
  chain->add_option("--max-len", ctx.max_len);
  add_common(chain);

  CLI::App* ict = app.add_subcommand("ict", "internal chain transitivity of a set");
  ict->add_option("--set", ctx.set_file)->required();
  ict->add_option("--delta", ctx.delta_lit);
  ict->add_option("--max-len", ctx.max_len);
  add_common(ict);

  CLI::App* realize = app.add_subcommand("realize", "realize a set as an omega-limit set");
  realize->add_option("--subshift", ctx.subshift_file)->required();
  realize->add_option("--set", ctx.set_file)->required();
  realize->add_option("--mode", ctx.mode, "ict (attracting) or sft (invariant)");
  realize->add_option("--depth", ctx.depth, "verify omega prefixes at depths 1..n");
  realize->add_option("--t0", ctx.t0);
  realize->add_option("--levels", ctx.levels);
  add_common(realize);

  CLI::App* omega = app.add_subcommand("omega", "finite-horizon omega-limit prefixes");
  omega->add_option("--point", ctx.point_lit)->required();
  omega->add_option("--depth", ctx.depth)->required();
  omega->add_option("--t0", ctx.t0);
  omega->add_option("--levels", ctx.levels);
  omega->add_option("--set", ctx.set_file);
  add_common(omega);

  CLI::App* demo = app.add_subcommand("demo", "run a named reproduction bundle");
  demo->add_option("name", ctx.demo_name, "remark1 | remark2 | monotone | dichotomy-finite | sbt-ict | sft-realize")
      ->required();
  demo->add_option("--json", ctx.json_path);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help() << std::flush;
    return {0, json{{"help", true}}};
  } catch (const CLI::ParseError& e) {
    return {2, json{{"error", e.what()}, {"exit", 2}}};
  }

  try {
    RunResult result;
    if (check->parsed()) result = cmd_check(ctx);
    else if (allowed->parsed()) result = cmd_allowed(ctx);
    else if (glue->parsed()) result = cmd_glue(ctx);
    else if (shadow->parsed()) result = cmd_shadow(ctx);
    else if (chain->parsed()) result = cmd_chain(ctx);
    else if (ict->parsed()) result = cmd_ict(ctx);
    else if (realize->parsed()) result = cmd_realize(ctx);
    else if (omega->parsed()) result = cmd_omega(ctx);
    else if (demo->parsed()) result = cmd_demo(ctx);
    else return {2, json{{"error", "no subcommand"}}};
    emit(result, ctx.json_path);
    return result;
  } catch (const SpecError& e) {
    RunResult r{2, json{{"error", e.what()}, {"kind", "spec"}}};
    emit(r, ctx.json_path);
    return r;
  } catch (const PreconditionError& e) {
    RunResult r{2, json{{"error", e.what()}, {"kind", "precondition"}}};
    emit(r, ctx.json_path);
    return r;
  }
}

}  // namespace shiftlab::cli
