#pragma once

#include <memory>
#include <string>

#include "json.hpp"
#include "shiftlab/dyadic.hpp"
#include "shiftlab/point.hpp"
#include "shiftlab/shadowing.hpp"
#include "shiftlab/stream.hpp"
#include "shiftlab/subshift.hpp"
#include "shiftlab/transitivity.hpp"

namespace shiftlab {

using nlohmann::json;

// JSON codecs for every value the CLI reads or prints.  Parsers throw
// SpecError with a message naming the offending field.
//
// Subshift spec:   {"kind":"sft","forbidden":[[2,1],[0,1,0]]}
//                  optionally with "alphabet":[0,1,2,3] to declare a finite
//                  ambient alphabet, or
//                  {"kind":"rule","name":"monotone",
//                   "direction":"non-increasing","max_len":2,
//                   "alphabet_bound":16}
// Point:           literal string ("0 1|2 3", "remark1"), or a structured
//                  {"scheme":...} object for construction outputs.
// Set:             {"kind":"finite","points":["|0","|1"]} or
//                  {"kind":"family","name":"remark2"}
// Pseudo-orbit:    {"delta":"2^-3","points":["0 1|2", ...]}
// Streams:         {"stream":"orbit","base":...} et al.

json dyadic_to_json(Dyadic d);
Dyadic dyadic_from_json(const json& j);

json point_to_json(const Point& x);
Point point_from_json(const json& j);

json stream_to_json(const PointStream& s);
std::shared_ptr<const PointStream> stream_from_json(const json& j);

json subshift_to_json(const Subshift& s);
Subshift subshift_from_json(const json& j);

json set_to_json(const SetPresentation& z);
SetPresentation set_from_json(const json& j);

json pseudo_orbit_to_json(const PseudoOrbit& po);
PseudoOrbit pseudo_orbit_from_json(const json& j);

json load_json_file(const std::string& path);

}  // namespace shiftlab
