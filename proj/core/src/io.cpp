#include "hq/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hq/errors.hpp"

namespace hq {

namespace {

[[noreturn]] void violation(const std::string& pointer, const std::string& what) {
  json d = {{"pointer", pointer.empty() ? "/" : pointer}, {"message", what}};
  fail(ErrorCode::SchemaViolation, "schema violation at " + (pointer.empty() ? "/" : pointer) + ": " + what,
       d.dump());
}

std::string child(const std::string& pointer, const std::string& key) {
  std::string k;
  for (char c : key) {
    if (c == '~') k += "~0";
    else if (c == '/') k += "~1";
    else k += c;
  }
  return pointer + "/" + k;
}

std::string child(const std::string& pointer, std::size_t index) {
  return pointer + "/" + std::to_string(index);
}

const json& member(const json& j, const std::string& key, const std::string& pointer) {
  if (!j.is_object()) violation(pointer, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) violation(child(pointer, key), "missing member");
  return *it;
}

void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& pointer) {
  if (!j.is_object()) violation(pointer, "expected an object");
  std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) violation(child(pointer, it.key()), "unknown member");
}

long long integer(const json& j, const std::string& pointer) {
  if (!j.is_number_integer()) violation(pointer, "expected an integer");
  return j.get<long long>();
}

int small_int(const json& j, const std::string& pointer, long long lo, long long hi) {
  long long v = integer(j, pointer);
  if (v < lo || v > hi)
    violation(pointer, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]");
  return static_cast<int>(v);
}

const json& array(const json& j, const std::string& pointer) {
  if (!j.is_array()) violation(pointer, "expected an array");
  return j;
}

std::string string_value(const json& j, const std::string& pointer) {
  if (!j.is_string()) violation(pointer, "expected a string");
  return j.get<std::string>();
}

std::vector<int> int_array(const json& j, const std::string& pointer, long long lo, long long hi) {
  std::vector<int> out;
  const json& a = array(j, pointer);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(small_int(a[i], child(pointer, i), lo, hi));
  return out;
}

json steps_to_json(const Walk& w) {
  json s = json::array();
  for (const Step& st : w.steps) s.push_back({{"arrow", st.arrow}, {"sign", st.sign}});
  return s;
}

std::vector<Step> parse_steps(const Quiver& q, const json& j, const std::string& pointer) {
  std::vector<Step> steps;
  const json& a = array(j, pointer);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string p = child(pointer, i);
    only_keys(a[i], {"arrow", "sign"}, p);
    Step st;
    st.arrow = small_int(member(a[i], "arrow", p), child(p, "arrow"), 0, 1LL << 30);
    if (!q.has_arrow(st.arrow)) violation(child(p, "arrow"), "no arrow with this id");
    st.sign = a[i].contains("sign") ? small_int(a[i]["sign"], child(p, "sign"), -1, 1) : 1;
    if (st.sign == 0) violation(child(p, "sign"), "sign must be 1 or -1");
    steps.push_back(st);
  }
  return steps;
}

// Library errors raised while assembling a value are reported at its pointer.
template <class F>
auto at_pointer(const std::string& pointer, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaViolation) throw;
    json d = {{"pointer", pointer.empty() ? "/" : pointer}, {"message", e.what()},
              {"code", error_code_name(e.code())}};
    throw Error(ErrorCode::SchemaViolation,
                "schema violation at " + (pointer.empty() ? "/" : pointer) + ": " + e.what(), d.dump());
  }
}

json zvector_to_json(const ZVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

std::string dot_quote(const std::string& s) { return json(s).dump(); }

}  // namespace

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidInput, "cannot open " + path, json({{"path", path}}).dump());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    json d = {{"pointer", "/"}, {"path", path}, {"message", e.what()}};
    fail(ErrorCode::SchemaViolation, std::string("invalid JSON in ") + path + ": " + e.what(), d.dump());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::InvalidInput, "cannot write " + path, json({{"path", path}}).dump());
  out << text;
}

json quiver_to_json(const Quiver& q) {
  json arrows = json::array();
  for (const Arrow& a : q.arrows()) {
    json x = {{"id", a.id}, {"src", a.src}, {"tgt", a.tgt}};
    if (!a.label.empty()) x["label"] = a.label;
    arrows.push_back(x);
  }
  return {{"vertices", q.num_vertices()}, {"arrows", arrows}};
}

Quiver quiver_from_json(const json& j, const std::string& pointer) {
  only_keys(j, {"vertices", "arrows"}, pointer);
  int n = small_int(member(j, "vertices", pointer), child(pointer, "vertices"), 0, kMaxVertices);
  Quiver q(n);
  std::string ap = child(pointer, "arrows");
  const json& arrows = j.contains("arrows") ? array(j["arrows"], ap) : json::array();
  std::set<int> ids;
  std::vector<std::tuple<int, int, int, std::string>> rows;
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    std::string p = child(ap, i);
    only_keys(arrows[i], {"id", "src", "tgt", "label"}, p);
    int id = arrows[i].contains("id") ? small_int(arrows[i]["id"], child(p, "id"), 0, 1LL << 30)
                                      : static_cast<int>(i);
    if (!ids.insert(id).second) violation(child(p, "id"), "duplicate arrow id");
    int s = small_int(member(arrows[i], "src", p), child(p, "src"), 0, n - 1);
    int t = small_int(member(arrows[i], "tgt", p), child(p, "tgt"), 0, n - 1);
    std::string label = arrows[i].contains("label") ? string_value(arrows[i]["label"], child(p, "label"))
                                                    : std::string();
    rows.emplace_back(id, s, t, label);
  }
  for (auto& [id, s, t, label] : rows) q.add_arrow_with_id(id, s, t, label);
  return q;
}

json walk_to_json(const Walk& w) { return {{"start", w.start}, {"steps", steps_to_json(w)}}; }

Walk walk_from_json(const Quiver& q, const json& j, const std::string& pointer) {
  only_keys(j, {"start", "steps"}, pointer);
  int start = small_int(member(j, "start", pointer), child(pointer, "start"), 0, q.num_vertices() - 1);
  std::vector<Step> steps = j.contains("steps") ? parse_steps(q, j["steps"], child(pointer, "steps"))
                                                : std::vector<Step>{};
  return at_pointer(pointer, [&] {
    if (steps.empty()) return trivial_walk(start);
    Walk w = make_walk(q, steps);
    if (w.start != start) fail(ErrorCode::NotComposable, "walk does not start at `start`");
    return w;
  });
}

Walk steps_from_json(const Quiver& q, const json& j, const std::string& pointer) {
  std::vector<Step> steps = parse_steps(q, j, pointer);
  if (steps.empty()) violation(pointer, "empty step list");
  return at_pointer(pointer, [&] { return make_walk(q, steps); });
}

json covering_to_json(const Covering& c) {
  json j = {{"total", quiver_to_json(c.total)}, {"base", quiver_to_json(c.base)},
            {"vmap", c.vmap}, {"amap", c.amap}};
  if (!c.deck.empty()) {
    json d = json::array();
    for (const auto& g : c.deck) d.push_back({{"vperm", g.vperm}, {"aperm", g.aperm}});
    j["deck"] = d;
  }
  return j;
}

Covering covering_from_json(const json& j, const std::string& pointer) {
  only_keys(j, {"total", "base", "vmap", "amap", "deck"}, pointer);
  Covering c;
  c.total = quiver_from_json(member(j, "total", pointer), child(pointer, "total"));
  c.base = quiver_from_json(member(j, "base", pointer), child(pointer, "base"));
  c.vmap = int_array(member(j, "vmap", pointer), child(pointer, "vmap"), 0, c.base.num_vertices() - 1);
  if (static_cast<int>(c.vmap.size()) != c.total.num_vertices())
    violation(child(pointer, "vmap"), "needs one entry per total vertex");
  c.amap = int_array(member(j, "amap", pointer), child(pointer, "amap"), 0, 1LL << 30);
  if (static_cast<int>(c.amap.size()) != c.total.num_arrows())
    violation(child(pointer, "amap"), "needs one entry per total arrow");
  for (std::size_t i = 0; i < c.amap.size(); ++i)
    if (!c.base.has_arrow(c.amap[i])) violation(child(child(pointer, "amap"), i), "no base arrow with this id");
  if (j.contains("deck")) {
    std::string dp = child(pointer, "deck");
    const json& d = array(j["deck"], dp);
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::string p = child(dp, i);
      only_keys(d[i], {"vperm", "aperm"}, p);
      DeckElement g;
      g.vperm = int_array(member(d[i], "vperm", p), child(p, "vperm"), 0, c.total.num_vertices() - 1);
      g.aperm = int_array(member(d[i], "aperm", p), child(p, "aperm"), 0, 1LL << 30);
      if (static_cast<int>(g.vperm.size()) != c.total.num_vertices() ||
          static_cast<int>(g.aperm.size()) != c.total.num_arrows())
        violation(p, "deck element has the wrong size");
      c.deck.push_back(std::move(g));
    }
  }
  CoveringCheck chk = check_covering(c);
  if (!chk.ok) {
    json det = {{"pointer", pointer.empty() ? "/" : pointer}, {"violation", chk.violation}};
    fail(ErrorCode::InvalidCovering, "not a covering: " + chk.violation, det.dump());
  }
  return c;
}

json homotopy_to_json(const HomotopyOracle& h) {
  json j = {{"type", oracle_kind_name(h.kind())}};
  switch (h.kind()) {
    case HomotopyOracle::Kind::Generated:
    case HomotopyOracle::Kind::AbelianQuotient: {
      json g = json::array();
      for (const Walk& w : h.generators()) g.push_back(steps_to_json(w));
      j["generators"] = g;
      if (h.kind() == HomotopyOracle::Kind::Generated && h.search_bound() != default_search_bound())
        j["search_bound"] = h.search_bound();
      break;
    }
    case HomotopyOracle::Kind::FiniteCover:
      j["cover"] = covering_to_json(h.covering());
      break;
    default:
      break;
  }
  return j;
}

HomotopyOracle homotopy_from_json(const Quiver& q, const json& j, const std::string& pointer) {
  only_keys(j, {"type", "generators", "cover", "search_bound"}, pointer);
  std::string type = string_value(member(j, "type", pointer), child(pointer, "type"));
  auto generators = [&] {
    std::vector<Walk> gens;
    std::string gp = child(pointer, "generators");
    const json& g = array(member(j, "generators", pointer), gp);
    for (std::size_t i = 0; i < g.size(); ++i) {
      Walk w = steps_from_json(q, g[i], child(gp, i));
      if (!is_closed(q, w)) violation(child(gp, i), "generator is not a closed walk");
      gens.push_back(w);
    }
    return gens;
  };
  if (type == "trivial") return HomotopyOracle::trivial(q);
  if (type == "full") return HomotopyOracle::full(q);
  if (type == "generated") {
    std::int64_t bound = default_search_bound();
    if (j.contains("search_bound")) {
      bound = integer(j["search_bound"], child(pointer, "search_bound"));
      if (bound < 0) violation(child(pointer, "search_bound"), "must be nonnegative");
    }
    auto gens = generators();
    return HomotopyOracle::generated(q, std::move(gens), bound);
  }
  if (type == "abelian") {
    auto gens = generators();
    return HomotopyOracle::abelian(q, std::move(gens));
  }
  if (type == "cover") {
    Covering c = covering_from_json(member(j, "cover", pointer), child(pointer, "cover"));
    if (!(c.base == q)) violation(child(pointer, "cover"), "cover base differs from the quiver");
    return HomotopyOracle::finite_cover(std::move(c));
  }
  violation(child(pointer, "type"), "unknown homotopy type '" + type + "'");
}

json membership_to_json(const Quiver& q, const Membership& m) {
  json j = {{"verdict", verdict_name(m.verdict)}, {"certificate", certificate_name(m.certificate)}};
  if (!m.witness.empty()) {
    json w = json::array();
    for (const auto& f : m.witness)
      w.push_back({{"path", walk_to_json(f.path)}, {"path_written", to_string(q, f.path)},
                   {"generator", f.generator}, {"exponent", f.exponent}});
    j["witness"] = w;
  }
  if (m.lift_start >= 0) {
    j["lift_start"] = m.lift_start;
    j["lift_end"] = m.lift_end;
  }
  if (!m.coefficients.empty()) j["coefficients"] = zvector_to_json(m.coefficients);
  if (!m.character.empty()) {
    j["character"] = zvector_to_json(m.character);
    j["modulus"] = m.modulus.get_str();
  }
  if (!m.arrow_images.empty()) j["arrow_images"] = m.arrow_images;
  if (m.expansions) j["expansions"] = m.expansions;
  return j;
}

json tracked_to_json(const TrackedQuiver& t) {
  json words = json::array();
  for (const Arrow& a : t.current.arrows()) {
    const Walk& w = t.word(a.id);
    words.push_back({{"arrow", a.id}, {"label", a.label}, {"word", walk_to_json(w)},
                     {"written", to_string(t.base(), w)}});
  }
  json dels = json::array();
  for (const auto& d : t.deletions) {
    dels.push_back({{"i", d.i}, {"j", d.j}, {"gamma", d.gamma}, {"delta", d.delta},
                    {"gamma_label", d.gamma_label}, {"delta_label", d.delta_label},
                    {"membership", membership_to_json(t.base(), d.membership)}});
  }
  return {{"quiver", quiver_to_json(t.current)}, {"base", quiver_to_json(t.base())},
          {"homotopy", oracle_kind_name(t.oracle.kind())}, {"log", t.log},
          {"words", words}, {"deletions", dels}};
}

json surface_to_json(const ColoredSurface& s) {
  json p = json::array();
  for (auto c : s.punctures) p.push_back({{"color", c == PunctureColor::I ? "I" : "II"}});
  return {{"genus", s.genus}, {"boundaries", s.boundaries}, {"punctures", p}};
}

ColoredSurface surface_from_json(const json& j, const std::string& pointer) {
  only_keys(j, {"genus", "boundaries", "punctures"}, pointer);
  ColoredSurface s;
  s.genus = j.contains("genus") ? small_int(j["genus"], child(pointer, "genus"), 0, 16) : 0;
  if (j.contains("boundaries"))
    s.boundaries = int_array(j["boundaries"], child(pointer, "boundaries"), 1, 64);
  if (j.contains("punctures")) {
    std::string pp = child(pointer, "punctures");
    const json& a = array(j["punctures"], pp);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string p = child(pp, i);
      only_keys(a[i], {"color"}, p);
      std::string c = a[i].contains("color") ? string_value(a[i]["color"], child(p, "color")) : "I";
      if (c == "I") s.punctures.push_back(PunctureColor::I);
      else if (c == "II") s.punctures.push_back(PunctureColor::II);
      else violation(child(p, "color"), "color must be \"I\" or \"II\"");
    }
  }
  at_pointer(pointer, [&] { validate_surface(s); });
  return s;
}

json triangulation_to_json(const TaggedTriangulation& t) {
  const Triangulation& x = t.ideal;
  json tris = json::array();
  for (const Triangle& tr : x.triangles) tris.push_back({{"sides", tr.sides}, {"vertices", tr.vertices}});
  json notched = json::array();
  for (char c : t.notched) notched.push_back(c != 0);
  json pieces = json::array();
  for (const Piece& p : puzzle_pieces(x)) {
    std::set<int> arcs;
    for (int ti : p.triangles)
      for (int s : x.triangles[ti].sides)
        if (!is_boundary_side(s)) arcs.insert(s);
    pieces.push_back({{"kind", piece_kind_name(p.kind)}, {"triangles", p.triangles},
                      {"arcs", std::vector<int>(arcs.begin(), arcs.end())}});
  }
  return {{"surface", surface_to_json(x.surface)}, {"arcs", x.arc_labels}, {"triangles", tris},
          {"notched", notched}, {"pieces", pieces}};
}

TaggedTriangulation triangulation_from_json(const json& j, const std::string& pointer) {
  only_keys(j, {"surface", "arcs", "triangles", "notched", "pieces"}, pointer);
  TaggedTriangulation t;
  Triangulation& x = t.ideal;
  x.surface = surface_from_json(member(j, "surface", pointer), child(pointer, "surface"));
  std::string ap = child(pointer, "arcs");
  const json& arcs = array(member(j, "arcs", pointer), ap);
  for (std::size_t i = 0; i < arcs.size(); ++i) x.arc_labels.push_back(string_value(arcs[i], child(ap, i)));
  int n = x.num_arcs();
  int segs = x.surface.num_boundary_segments();
  int points = x.surface.num_marked_points();
  std::string tp = child(pointer, "triangles");
  const json& tris = array(member(j, "triangles", pointer), tp);
  for (std::size_t i = 0; i < tris.size(); ++i) {
    std::string p = child(tp, i);
    only_keys(tris[i], {"sides", "vertices"}, p);
    auto sides = int_array(member(tris[i], "sides", p), child(p, "sides"), -segs, n - 1);
    auto verts = int_array(member(tris[i], "vertices", p), child(p, "vertices"), 0, points - 1);
    if (sides.size() != 3) violation(child(p, "sides"), "a triangle has three sides");
    if (verts.size() != 3) violation(child(p, "vertices"), "a triangle has three vertices");
    Triangle tr;
    for (int c = 0; c < 3; ++c) {
      tr.sides[c] = sides[c];
      tr.vertices[c] = verts[c];
    }
    x.triangles.push_back(tr);
  }
  t.notched.assign(x.surface.punctures.size(), 0);
  if (j.contains("notched")) {
    std::string np = child(pointer, "notched");
    const json& a = array(j["notched"], np);
    if (a.size() != t.notched.size()) violation(np, "needs one tag per puncture");
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_boolean()) violation(child(np, i), "expected a boolean");
      t.notched[i] = a[i].get<bool>() ? 1 : 0;
    }
  }
  at_pointer(pointer, [&] { validate_triangulation(x); });
  return t;
}

SemifieldElement parse_semifield_monomial(const Semifield& p, const std::string& s,
                                          const std::string& pointer) {
  SemifieldElement e = semifield_one(p);
  std::string body;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) body += c;
  if (body.empty() || body == "1") return e;
  std::stringstream in(body);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    std::string name = factor;
    int exp = 1;
    auto caret = factor.find('^');
    if (caret != std::string::npos) {
      name = factor.substr(0, caret);
      try {
        std::size_t used = 0;
        exp = std::stoi(factor.substr(caret + 1), &used);
        if (used != factor.size() - caret - 1) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        violation(pointer, "bad exponent in '" + factor + "'");
      }
    }
    auto it = std::find(p.generators.begin(), p.generators.end(), name);
    if (it == p.generators.end()) violation(pointer, "unknown semifield generator '" + name + "'");
    e[it - p.generators.begin()] += exp;
  }
  return e;
}

std::string semifield_monomial_string(const Semifield& p, const SemifieldElement& e) {
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += p.generators[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

json seed_to_json(const Seed& s) {
  if (!s.address.empty()) fail(ErrorCode::InvalidInput, "only initial seeds are serialized");
  json coeffs = json::array();
  for (const auto& c : s.coeffs) coeffs.push_back(semifield_monomial_string(s.semifield, c));
  json sf = {{"type", s.semifield.kind == Semifield::Kind::Trivial ? "trivial" : "tropical"},
             {"gens", s.semifield.generators}};
  return {{"quiver", quiver_to_json(s.tq.current)}, {"homotopy", homotopy_to_json(s.tq.oracle)},
          {"semifield", sf}, {"coeffs", coeffs}, {"principal", s.principal}};
}

Seed seed_from_json(const json& j, const std::string& pointer) {
  only_keys(j, {"quiver", "homotopy", "semifield", "coeffs", "principal"}, pointer);
  Quiver q = quiver_from_json(member(j, "quiver", pointer), child(pointer, "quiver"));
  HomotopyOracle h = j.contains("homotopy") ? homotopy_from_json(q, j["homotopy"], child(pointer, "homotopy"))
                                            : HomotopyOracle::full(q);
  bool principal = false;
  if (j.contains("principal")) {
    if (!j["principal"].is_boolean()) violation(child(pointer, "principal"), "expected a boolean");
    principal = j["principal"].get<bool>();
  }
  TrackedQuiver tq = at_pointer(pointer, [&] { return init_tracked(q, h); });
  if (q.num_vertices() > kMaxClusterRank)
    fail(ErrorCode::ResourceLimit, "cluster rank above " + std::to_string(kMaxClusterRank));
  if (principal) return principal_seed(tq);

  Semifield p;
  if (j.contains("semifield")) {
    std::string sp = child(pointer, "semifield");
    only_keys(j["semifield"], {"type", "gens"}, sp);
    std::string type = string_value(member(j["semifield"], "type", sp), child(sp, "type"));
    if (type == "tropical") {
      std::vector<std::string> gens;
      std::string gp = child(sp, "gens");
      const json& g = array(member(j["semifield"], "gens", sp), gp);
      for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(string_value(g[i], child(gp, i)));
      p = Semifield::tropical(gens);
    } else if (type != "trivial") {
      violation(child(sp, "type"), "semifield type must be \"trivial\" or \"tropical\"");
    }
  }
  std::vector<SemifieldElement> coeffs(static_cast<std::size_t>(q.num_vertices()), semifield_one(p));
  if (j.contains("coeffs")) {
    std::string cp = child(pointer, "coeffs");
    const json& c = array(j["coeffs"], cp);
    if (static_cast<int>(c.size()) != q.num_vertices()) violation(cp, "needs one coefficient per vertex");
    for (std::size_t i = 0; i < c.size(); ++i)
      coeffs[i] = parse_semifield_monomial(p, string_value(c[i], child(cp, i)), child(cp, i));
  }
  return initial_seed(tq, p, coeffs);
}

json laurent_report_to_json(const LaurentReport& r) {
  json nodes = json::array();
  for (const auto& n : r.nodes) {
    json path = json::array();
    for (VertexId k : n.address) path.push_back(k + 1);
    json x = {{"path", path}, {"variable", n.variable + 1}, {"value", n.value},
              {"laurent", n.laurent}, {"nonnegative", n.nonnegative}};
    if (n.g) x["g_vector"] = *n.g;
    if (n.f) x["f_polynomial"] = *n.f;
    nodes.push_back(x);
  }
  return {{"nodes", nodes}, {"all_laurent", r.all_laurent}, {"all_nonnegative", r.all_nonnegative},
          {"findings", r.findings}};
}

json flip_graph_to_json(const FlipGraph& g) {
  json nodes = json::array();
  for (const auto& t : g.nodes) nodes.push_back(triangulation_to_json(t));
  return {{"nodes", nodes}, {"flips", g.flips}, {"complete", g.complete}, {"edges", g.num_edges()}};
}

std::string quiver_to_dot(const Quiver& q, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << dot_quote(name) << " {\n";
  for (int v = 0; v < q.num_vertices(); ++v) out << "  " << v << " [label=\"" << v + 1 << "\"];\n";
  for (const Arrow& a : q.arrows()) {
    out << "  " << a.src << " -> " << a.tgt;
    if (!a.label.empty()) out << " [label=" << dot_quote(a.label) << "]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string covering_to_dot(const Covering& c) {
  std::ostringstream out;
  out << "digraph \"cover\" {\n";
  for (int v = 0; v < c.total.num_vertices(); ++v)
    out << "  " << v << " [label=\"" << c.vmap[v] + 1 << "\"];\n";
  for (const Arrow& a : c.total.arrows()) {
    const Arrow& b = c.base.arrow(c.base_arrow(a.id));
    out << "  " << a.src << " -> " << a.tgt << " [label=" << dot_quote(b.label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string flip_graph_to_dot(const FlipGraph& g) {
  std::ostringstream out;
  out << "graph \"flips\" {\n";
  for (std::size_t v = 0; v < g.nodes.size(); ++v) out << "  " << v << ";\n";
  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t v = 0; v < g.flips.size(); ++v)
    for (std::size_t k = 0; k < g.flips[v].size(); ++k) {
      int w = g.flips[v][k];
      if (w < 0) continue;
      int a = std::min<int>(static_cast<int>(v), w), b = std::max<int>(static_cast<int>(v), w);
      if (a == b) continue;
      if (!seen.insert({a, b, static_cast<int>(k)}).second) continue;
      out << "  " << a << " -- " << b << " [label=" << dot_quote(g.nodes[v].ideal.arc_labels[k]) << "];\n";
    }
  out << "}\n";
  return out.str();
}

json error_to_json(const Error& e) {
  json j = {{"error", error_code_name(e.code())}, {"message", e.what()}};
  if (!e.detail().empty()) {
    try {
      j["detail"] = json::parse(e.detail());
    } catch (const json::parse_error&) {
      j["detail"] = e.detail();
    }
  }
  return j;
}

}  // namespace hq
