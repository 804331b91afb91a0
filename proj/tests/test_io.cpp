#include <doctest.h>

#include <filesystem>

#include "hq/examples.hpp"
#include "hq/io.hpp"

using namespace hq;

namespace {

// Pointer recorded in a SchemaViolation, or "" for any other outcome.
std::string violation_pointer(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::SchemaViolation) return "code:" + std::string(error_code_name(e.code()));
    return json::parse(e.detail()).at("pointer").get<std::string>();
  }
  return "";
}

std::string data_path(const std::string& rel) { return std::string(HQ_DATA_DIR) + "/" + rel; }

}  // namespace

TEST_CASE("quiver round-trip") {
  Quiver q = markov_quiver();
  json j = quiver_to_json(q);
  CHECK(j["vertices"] == 3);
  CHECK(j["arrows"].size() == 6);
  CHECK(quiver_from_json(j) == q);
  CHECK(quiver_from_json(json::parse(j.dump())) == q);
  json bare = {{"vertices", 2}, {"arrows", {{{"src", 0}, {"tgt", 1}}}}};
  Quiver b = quiver_from_json(bare);
  CHECK(b.num_arrows() == 1);
  CHECK(b.arrows()[0].id == 0);
}

TEST_CASE("quiver schema violations carry a pointer") {
  CHECK(violation_pointer([] { quiver_from_json(json::parse(R"({"arrows": []})")); }) == "/vertices");
  CHECK(violation_pointer([] {
          quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [{"src": 0, "tgt": 5}]})"));
        }) == "/arrows/0/tgt");
  CHECK(violation_pointer([] {
          quiver_from_json(json::parse(R"({"vertices": 2, "arrows": [{"src": 0, "tgt": 1, "colour": 1}]})"));
        }).rfind("/arrows/0", 0) == 0);
  CHECK(violation_pointer([] { quiver_from_json(json::parse(R"({"vertices": "three", "arrows": []})")); }) ==
        "/vertices");
  CHECK(violation_pointer([] { quiver_from_json(json::parse(R"({"vertices": 1, "arrows": [], "x": 0})")); }) != "");
}

TEST_CASE("walk round-trip") {
  Quiver q = three_cycle_quiver();
  Walk w = three_cycle_walk(q);
  CHECK(walk_from_json(q, walk_to_json(w)) == w);
  Walk inv = inverse(q, w);
  CHECK(walk_from_json(q, walk_to_json(inv)) == inv);
  json broken = walk_to_json(w);
  broken["steps"][1]["sign"] = -1;
  CHECK(violation_pointer([&] { walk_from_json(q, broken); }) != "");
}

TEST_CASE("covering round-trip") {
  for (const Covering& c : {hexagon_cover(), klein_four_cover(), mutable_not_sufficient_cover()}) {
    Covering back = covering_from_json(covering_to_json(c));
    CHECK(back.total == c.total);
    CHECK(back.base == c.base);
    CHECK(back.vmap == c.vmap);
    CHECK(back.amap == c.amap);
  }
  json bad = covering_to_json(hexagon_cover());
  bad["vmap"][0] = 1;
  try {
    covering_from_json(bad);
    FAIL("expected an invalid covering");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCovering);
  }
}

TEST_CASE("homotopy round-trip") {
  Quiver q = markov_quiver();
  auto gens = markov_homotopy_generators(q);
  HomotopyOracle h = HomotopyOracle::generated(q, gens[2]);
  HomotopyOracle back = homotopy_from_json(q, homotopy_to_json(h));
  CHECK(back.kind() == HomotopyOracle::Kind::Generated);
  CHECK(back.generators() == h.generators());
  for (const char* t : {"trivial", "full"}) {
    HomotopyOracle o = homotopy_from_json(q, json{{"type", t}});
    CHECK(std::string(oracle_kind_name(o.kind())) != "");
  }
  Quiver tri = triple_two_cycle_quiver();
  HomotopyOracle cov = HomotopyOracle::finite_cover(klein_four_cover());
  HomotopyOracle cb = homotopy_from_json(tri, homotopy_to_json(cov));
  CHECK(cb.kind() == HomotopyOracle::Kind::FiniteCover);
  json open = {{"type", "generated"}, {"generators", {{{{"arrow", 0}, {"sign", 1}}}}}};
  CHECK(violation_pointer([&] { homotopy_from_json(q, open); }) == "/generators/0");
  CHECK(violation_pointer([&] { homotopy_from_json(q, json{{"type", "other"}}); }) == "/type");
}

TEST_CASE("tracked quiver output") {
  Quiver q = three_cycle_quiver();
  TrackedQuiver t = mutate(init_tracked(q, HomotopyOracle::generated(q, {three_cycle_walk(q)})), 1);
  json j = tracked_to_json(t);
  CHECK(j["quiver"]["arrows"].size() == 2);
  CHECK(j["deletions"].size() == 1);
  CHECK(j["log"] == json::array({1}));
}

TEST_CASE("triangulation round-trip") {
  for (const auto& t : {once_punctured_torus(PunctureColor::II), once_punctured_digon(PunctureColor::I),
                        thrice_punctured_sphere(), twice_punctured_monogon(PunctureColor::II, PunctureColor::I)}) {
    json j = triangulation_to_json(t);
    TaggedTriangulation back = triangulation_from_json(j);
    CHECK(canonical_form(back) == canonical_form(t));
    CHECK(back.ideal.triangles == t.ideal.triangles);
    CHECK(back.notched == t.notched);
    CHECK(j.contains("pieces"));
  }
  json bad = triangulation_to_json(once_punctured_digon(PunctureColor::II));
  bad["triangles"][0]["sides"][0] = 7;
  CHECK(violation_pointer([&] { triangulation_from_json(bad); }) != "");
  json colour = triangulation_to_json(once_punctured_digon(PunctureColor::II));
  colour["surface"]["punctures"][0]["color"] = "III";
  CHECK(violation_pointer([&] { triangulation_from_json(colour); }).rfind("/surface/punctures/0", 0) == 0);
}

TEST_CASE("semifield monomials") {
  Semifield p = Semifield::tropical({"y1", "y2", "y3"});
  CHECK(parse_semifield_monomial(p, "1") == SemifieldElement{0, 0, 0});
  CHECK(parse_semifield_monomial(p, "y1^2*y3^-1") == SemifieldElement{2, 0, -1});
  CHECK(semifield_monomial_string(p, {2, 0, -1}) == "y1^2*y3^-1");
  CHECK(semifield_monomial_string(p, {0, 0, 0}) == "1");
  CHECK_THROWS_AS(parse_semifield_monomial(p, "y4"), Error);
}

TEST_CASE("seed round-trip") {
  Quiver tri = triple_two_cycle_quiver();
  Seed s = principal_seed(init_tracked(tri, HomotopyOracle::finite_cover(klein_four_cover())));
  Seed back = seed_from_json(seed_to_json(s));
  CHECK(back.principal);
  CHECK(back.cluster == s.cluster);
  CHECK(back.coeffs == s.coeffs);
  CHECK(back.semifield.generators == s.semifield.generators);
  json trivial = {{"quiver", quiver_to_json(a2_quiver())}};
  Seed t = seed_from_json(trivial);
  CHECK(t.semifield.kind == Semifield::Kind::Trivial);
  CHECK(t.tq.oracle.kind() == HomotopyOracle::Kind::Full);
}

TEST_CASE("shipped inputs parse") {
  CHECK(quiver_from_json(read_json_file(data_path("inputs/markov.json"))) == markov_quiver());
  CHECK(covering_from_json(read_json_file(data_path("inputs/klein_four_cover.json"))).total.num_vertices() == 12);
  CHECK(triangulation_from_json(read_json_file(data_path("inputs/digon_II.json"))).ideal.num_arcs() == 2);
  CHECK(seed_from_json(read_json_file(data_path("inputs/klein_four_seed.json"))).principal);
  try {
    read_json_file(data_path("inputs/no_such_file.json"));
    FAIL("expected InvalidInput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidInput);
  }
}

TEST_CASE("DOT export") {
  std::string dot = quiver_to_dot(three_cycle_quiver());
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("1 -> 2") != std::string::npos);
  CHECK(dot.find("label=\"c\"") != std::string::npos);
  std::string g = flip_graph_to_dot(flip_graph(once_punctured_digon(PunctureColor::II), 20));
  CHECK(g.rfind("graph", 0) == 0);
  std::size_t edges = 0;
  for (std::size_t p = g.find(" -- "); p != std::string::npos; p = g.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 6);
  CHECK(covering_to_dot(hexagon_cover()).find("digraph") != std::string::npos);
}

TEST_CASE("error JSON") {
  json j = error_to_json(Error(ErrorCode::NotDivisible, "bad", R"({"x": 1})"));
  CHECK(j["error"] == "NotDivisible");
  CHECK(j["message"] == "bad");
}
