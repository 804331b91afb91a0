#pragma once

#include <string>

#include <json.hpp>

#include "hq/cluster.hpp"
#include "hq/surface.hpp"

namespace hq {

using json = nlohmann::json;

// Parsers throw SchemaViolation whose detail is {"pointer": "/json/pointer", ...}.
// Vertices are 0-based in every schema.
json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const json& j, const std::string& pointer = "");

// {"start": v, "steps": [{"arrow": id, "sign": 1|-1}]}
json walk_to_json(const Walk& w);
Walk walk_from_json(const Quiver& q, const json& j, const std::string& pointer = "");
// Bare step list; the start is the source of the first step.
Walk steps_from_json(const Quiver& q, const json& j, const std::string& pointer = "");

json covering_to_json(const Covering& c);
Covering covering_from_json(const json& j, const std::string& pointer = "");

// {"type": "trivial"|"full"|"generated"|"abelian"|"cover", "generators": [[steps]],
//  "cover": <covering>, "search_bound": int}
json homotopy_to_json(const HomotopyOracle& h);
HomotopyOracle homotopy_from_json(const Quiver& q, const json& j, const std::string& pointer = "");

json membership_to_json(const Quiver& q, const Membership& m);
json tracked_to_json(const TrackedQuiver& t);

json surface_to_json(const ColoredSurface& s);
ColoredSurface surface_from_json(const json& j, const std::string& pointer = "");
// {"surface": .., "arcs": [labels], "triangles": [{"sides": [..], "vertices": [..]}],
//  "notched": [bool per puncture]}; "pieces" is written as a derived view and ignored on input.
json triangulation_to_json(const TaggedTriangulation& t);
TaggedTriangulation triangulation_from_json(const json& j, const std::string& pointer = "");

// Monomial strings such as "1", "y1", "y1^2*y3^-1" over the semifield generators.
SemifieldElement parse_semifield_monomial(const Semifield& p, const std::string& s,
                                          const std::string& pointer = "");
std::string semifield_monomial_string(const Semifield& p, const SemifieldElement& e);

// Initial seeds only: the cluster is the initial one.
json seed_to_json(const Seed& s);
Seed seed_from_json(const json& j, const std::string& pointer = "");

json laurent_report_to_json(const LaurentReport& r);
json flip_graph_to_json(const FlipGraph& g);

std::string quiver_to_dot(const Quiver& q, const std::string& name = "Q");
std::string covering_to_dot(const Covering& c);
std::string flip_graph_to_dot(const FlipGraph& g);

json error_to_json(const Error& e);

}  // namespace hq
