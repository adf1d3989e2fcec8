#include "shiftlab/json_io.hpp"

#include <fstream>

#include "shiftlab/errors.hpp"
#include "shiftlab/transitivity.hpp"

namespace shiftlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw SpecError(what); }

Word word_from_json(const json& j) {
  if (j.is_string()) {
    auto w = parse_word(j.get<std::string>());
    if (!w) bad("unparseable word literal: " + j.dump());
    return *w;
  }
  if (!j.is_array()) bad("word must be a string literal or an array of symbols");
  Word out;
  for (const auto& e : j) {
    if (!e.is_number_unsigned()) bad("word symbols must be nonnegative integers");
    out.push_back(e.get<Symbol>());
  }
  return out;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (Symbol s : w) out.push_back(s);
  return out;
}

}  // namespace

json dyadic_to_json(Dyadic d) { return d.str(); }

Dyadic dyadic_from_json(const json& j) {
  if (!j.is_string()) bad("dyadic values are strings: \"1\", \"2^-m\", or \"0\"");
  auto d = Dyadic::parse(j.get<std::string>());
  if (!d) bad("unparseable dyadic literal: " + j.dump());
  return *d;
}

json point_to_json(const Point& x) {
  if (x.is_eventually_periodic()) return format_point(x);
  switch (x.scheme().kind()) {
    case SchemeKind::remark1:
      return "remark1";
    case SchemeKind::remark2:
      return "remark2";
    case SchemeKind::interleave: {
      const auto& s = static_cast<const InterleaveScheme&>(x.scheme());
      json pts = json::array();
      for (const Point& p : s.points()) pts.push_back(point_to_json(p));
      return json{{"scheme", "interleave"},
                  {"points", pts},
                  {"separator_start", s.separator_start()}};
    }
    case SchemeKind::concat: {
      const auto& s = static_cast<const ConcatScheme&>(x.scheme());
      return json{{"scheme", "concat"},
                  {"head", format_word(s.head())},
                  {"tail", point_to_json(s.tail())}};
    }
    case SchemeKind::shifted: {
      const auto& s = static_cast<const ShiftedScheme&>(x.scheme());
      return json{{"scheme", "shift"},
                  {"by", s.by()},
                  {"base", point_to_json(s.base())}};
    }
    case SchemeKind::diagonal: {
      const auto& s = static_cast<const DiagonalScheme&>(x.scheme());
      return json{{"scheme", "diagonal"},
                  {"offset", s.offset()},
                  {"stream", stream_to_json(*s.stream())}};
    }
  }
  bad("unknown scheme kind");
}

Point point_from_json(const json& j) {
  if (j.is_string()) {
    auto p = parse_point(j.get<std::string>());
    if (!p) bad("unparseable point literal: " + j.dump());
    return *p;
  }
  if (!j.is_object() || !j.contains("scheme")) bad("point must be a literal or a scheme object");
  const std::string kind = j.at("scheme").get<std::string>();
  if (kind == "interleave") {
    std::vector<Point> pts;
    for (const auto& e : j.at("points")) pts.push_back(point_from_json(e));
    return Point::interleave(std::move(pts), j.at("separator_start").get<Symbol>());
  }
  if (kind == "concat") {
    auto head = parse_word(j.at("head").get<std::string>());
    if (!head) bad("unparseable concat head");
    return Point::concat(std::move(*head), point_from_json(j.at("tail")));
  }
  if (kind == "shift") {
    return point_from_json(j.at("base")).shifted(j.at("by").get<std::uint64_t>());
  }
  if (kind == "diagonal") {
    return diagonal_point(stream_from_json(j.at("stream")),
                          j.at("offset").get<std::uint64_t>());
  }
  bad("unknown point scheme: " + kind);
}

json stream_to_json(const PointStream& s) {
  switch (s.kind()) {
    case StreamKind::orbit: {
      const auto& o = static_cast<const OrbitStream&>(s);
      return json{{"stream", "orbit"}, {"base", point_to_json(o.base())}};
    }
    case StreamKind::constant: {
      const auto& c = static_cast<const ConstantStream&>(s);
      return json{{"stream", "constant"}, {"base", point_to_json(c.base())}};
    }
    case StreamKind::spliced: {
      const auto& sp = static_cast<const SplicedOrbitStream&>(s);
      json head = json::array();
      for (const Point& p : sp.head()) head.push_back(point_to_json(p));
      return json{{"stream", "spliced"},
                  {"head", head},
                  {"tail", point_to_json(sp.tail())}};
    }
    case StreamKind::ict_chains: {
      const auto& ic = static_cast<const IctChainStream&>(s);
      json pts = json::array();
      for (const Point& p : ic.points()) pts.push_back(point_to_json(p));
      json ladder = json::array();
      for (Dyadic d : ic.ladder()) ladder.push_back(d.str());
      return json{{"stream", "ict-chains"}, {"points", pts}, {"ladder", ladder}};
    }
    case StreamKind::subsample: {
      const auto& su = static_cast<const SubsampleStream&>(s);
      return json{{"stream", "subsample"},
                  {"base", stream_to_json(*su.base())},
                  {"stride", su.stride()},
                  {"offset", su.offset()}};
    }
  }
  bad("unknown stream kind");
}

std::shared_ptr<const PointStream> stream_from_json(const json& j) {
  if (!j.is_object() || !j.contains("stream")) bad("stream must be an object");
  const std::string kind = j.at("stream").get<std::string>();
  if (kind == "orbit")
    return std::make_shared<const OrbitStream>(point_from_json(j.at("base")));
  if (kind == "constant")
    return std::make_shared<const ConstantStream>(point_from_json(j.at("base")));
  if (kind == "spliced") {
    std::vector<Point> head;
    for (const auto& e : j.at("head")) head.push_back(point_from_json(e));
    return std::make_shared<const SplicedOrbitStream>(std::move(head),
                                                      point_from_json(j.at("tail")));
  }
  if (kind == "ict-chains") {
    std::vector<Point> pts;
    for (const auto& e : j.at("points")) pts.push_back(point_from_json(e));
    std::vector<Dyadic> ladder;
    for (const auto& e : j.at("ladder")) ladder.push_back(dyadic_from_json(e));
    return std::make_shared<const IctChainStream>(std::move(pts), std::move(ladder));
  }
  if (kind == "subsample")
    return std::make_shared<const SubsampleStream>(stream_from_json(j.at("base")),
                                                   j.at("stride").get<std::uint64_t>(),
                                                   j.at("offset").get<std::uint64_t>());
  bad("unknown stream kind: " + kind);
}

json subshift_to_json(const Subshift& s) {
  if (const auto* ex = s.explicit_basis()) {
    json words = json::array();
    for (const Word& w : ex->words) words.push_back(word_to_json(w));
    json out{{"kind", "sft"}, {"forbidden", words}};
    if (ex->alphabet) {
      json alpha = json::array();
      for (Symbol a : *ex->alphabet) alpha.push_back(a);
      out["alphabet"] = alpha;
    }
    return out;
  }
  const auto* rule = s.rule_basis();
  return json{{"kind", "rule"},
              {"name", "monotone"},
              {"direction", rule->direction == MonotoneDirection::non_increasing
                                ? "non-increasing"
                                : "non-decreasing"},
              {"max_len", rule->max_len},
              {"alphabet_bound", rule->alphabet_bound}};
}

Subshift subshift_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("subshift spec needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "sft") {
    ExplicitBasis basis;
    if (!j.contains("forbidden")) bad("sft spec needs \"forbidden\"");
    for (const auto& e : j.at("forbidden")) basis.words.push_back(word_from_json(e));
    if (j.contains("alphabet")) {
      std::vector<Symbol> alpha;
      for (const auto& e : j.at("alphabet")) {
        if (!e.is_number_unsigned()) bad("alphabet symbols must be nonnegative integers");
        alpha.push_back(e.get<Symbol>());
      }
      basis.alphabet = std::move(alpha);
    }
    return Subshift::validate(std::move(basis));
  }
  if (kind == "rule") {
    const std::string name = j.value("name", "");
    if (name != "monotone") bad("unknown rule name: \"" + name + "\"");
    RuleBasis rule;
    const std::string dir = j.value("direction", "non-increasing");
    if (dir == "non-increasing")
      rule.direction = MonotoneDirection::non_increasing;
    else if (dir == "non-decreasing")
      rule.direction = MonotoneDirection::non_decreasing;
    else
      bad("unknown rule direction: \"" + dir + "\"");
    rule.max_len = j.value("max_len", 2u);
    rule.alphabet_bound = j.value("alphabet_bound", Symbol{16});
    return Subshift::validate(rule);
  }
  bad("unknown subshift kind: \"" + kind + "\"");
}

json set_to_json(const SetPresentation& z) {
  switch (z.kind()) {
    case SetKind::finite_ep: {
      json pts = json::array();
      for (const Point& p : z.points()) pts.push_back(point_to_json(p));
      return json{{"kind", "finite"}, {"points", pts}};
    }
    case SetKind::remark2_family:
      return json{{"kind", "family"}, {"name", "remark2"}};
    case SetKind::prefix_oracle:
    default:
      bad("prefix oracles are in-process only and cannot be serialized");
  }
}

SetPresentation set_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) bad("set spec needs a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") {
    std::vector<Point> pts;
    for (const auto& e : j.at("points")) pts.push_back(point_from_json(e));
    return SetPresentation::finite(std::move(pts));
  }
  if (kind == "family") {
    const std::string name = j.value("name", "");
    if (name != "remark2") bad("unknown family name: \"" + name + "\"");
    return SetPresentation::remark2_family();
  }
  bad("unknown set kind: \"" + kind + "\"");
}

json pseudo_orbit_to_json(const PseudoOrbit& po) {
  json pts = json::array();
  for (const Point& p : po.points) pts.push_back(point_to_json(p));
  return json{{"delta", po.delta.str()}, {"points", pts}};
}

PseudoOrbit pseudo_orbit_from_json(const json& j) {
  if (!j.is_object()) bad("pseudo-orbit spec must be an object");
  PseudoOrbit po;
  po.delta = dyadic_from_json(j.at("delta"));
  for (const auto& e : j.at("points")) po.points.push_back(point_from_json(e));
  if (po.points.empty()) bad("pseudo-orbit needs at least one point");
  return po;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    bad("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace shiftlab
