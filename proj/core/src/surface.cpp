#include "hq/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <set>

#include "hq/presentation.hpp"
#include "hq/tracked.hpp"
#include "json.hpp"

namespace hq {

int ColoredSurface::num_boundary_points() const {
  return std::accumulate(boundaries.begin(), boundaries.end(), 0);
}

void validate_surface(const ColoredSurface& s) {
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidSurface, why); };
  if (s.genus < 0) bad("negative genus");
  for (int m : s.boundaries)
    if (m < 1) bad("every boundary component needs a marked point");
  int b = static_cast<int>(s.boundaries.size());
  int p = static_cast<int>(s.punctures.size());
  int m = s.num_boundary_points();
  int p1 = static_cast<int>(std::count(s.punctures.begin(), s.punctures.end(), PunctureColor::I));
  if (m + p == 0) bad("no marked points");
  if (s.genus == 0 && b == 0) {
    if (p <= 2) bad("sphere with fewer than three punctures");
    if (p == 3 && p1 > 0) bad("thrice-punctured sphere must have only II-punctures");
    if (p == 4 && p1 >= 3) bad("four-punctured sphere with three or more I-punctures");
  }
  if (s.genus == 0 && b == 1) {
    if (m == 1 && p <= 1) bad("unpunctured or once-punctured monogon");
    if ((m == 2 || m == 3) && p == 0) bad("unpunctured digon or triangle");
  }
}

int arc_count(const ColoredSurface& s) {
  return 6 * s.genus + 3 * static_cast<int>(s.boundaries.size()) + 3 * static_cast<int>(s.punctures.size()) +
         s.num_boundary_points() - 6;
}

int punctured_euler_characteristic(const ColoredSurface& s) {
  int p2 = static_cast<int>(std::count(s.punctures.begin(), s.punctures.end(), PunctureColor::II));
  return 2 - 2 * s.genus - static_cast<int>(s.boundaries.size()) - p2;
}

namespace {

struct Slot {
  int tri = -1;
  int pos = -1;
};

// Endpoints (from, to) of boundary segment `seg`.
std::pair<int, int> segment_ends(const ColoredSurface& s, int seg) {
  int offset = 0;
  for (int m : s.boundaries) {
    if (seg < offset + m) {
      int j = seg - offset;
      return {offset + j, offset + (j + 1) % m};
    }
    offset += m;
  }
  return {-1, -1};
}

std::vector<std::vector<Slot>> arc_slots(const Triangulation& t) {
  std::vector<std::vector<Slot>> slots(t.num_arcs());
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i)
    for (int p = 0; p < 3; ++p) {
      int s = t.triangles[i].sides[p];
      if (s >= 0 && s < t.num_arcs()) slots[s].push_back({i, p});
    }
  return slots;
}

Slot other_slot(const std::vector<std::vector<Slot>>& slots, int arc, Slot here) {
  const auto& v = slots[arc];
  return (v[0].tri == here.tri && v[0].pos == here.pos) ? v[1] : v[0];
}

int next3(int i) { return (i + 1) % 3; }
int prev3(int i) { return (i + 2) % 3; }

// Corners (triangle, vertex position) around marked point v in rotation order.
// A corner at position c lies between side c-1 (ending at v) and side c.
std::vector<Slot> corners_around(const Triangulation& t, const std::vector<std::vector<Slot>>& slots, int v) {
  std::vector<Slot> all;
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i)
    for (int c = 0; c < 3; ++c)
      if (t.triangles[i].vertices[c] == v) all.push_back({i, c});
  if (all.empty()) return all;
  Slot start = all[0];
  for (const Slot& s : all)
    if (is_boundary_side(t.triangles[s.tri].sides[prev3(s.pos)])) start = s;
  std::vector<Slot> order;
  Slot cur = start;
  for (std::size_t guard = 0; guard <= all.size(); ++guard) {
    order.push_back(cur);
    int side = t.triangles[cur.tri].sides[cur.pos];
    if (is_boundary_side(side)) break;
    Slot o = other_slot(slots, side, cur);
    Slot nxt{o.tri, next3(o.pos)};
    if (nxt.tri == start.tri && nxt.pos == start.pos) break;
    cur = nxt;
  }
  return order;
}

std::string arrow_name(int i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

}  // namespace

std::vector<SelfFolded> self_folded_triangles(const Triangulation& t) {
  std::vector<SelfFolded> out;
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    const Triangle& tr = t.triangles[i];
    for (int p = 0; p < 3; ++p) {
      if (tr.sides[p] >= 0 && tr.sides[p] == tr.sides[next3(p)]) {
        out.push_back({i, tr.sides[prev3(p)], tr.sides[p], tr.vertices[next3(p)]});
        break;
      }
    }
  }
  return out;
}

int valency(const Triangulation& t, int marked_point) {
  int n = 0;
  std::vector<std::vector<Slot>> slots = arc_slots(t);
  for (int a = 0; a < t.num_arcs(); ++a) {
    if (slots[a].empty()) continue;
    const Triangle& tr = t.triangles[slots[a][0].tri];
    int p = slots[a][0].pos;
    n += (tr.vertices[p] == marked_point) + (tr.vertices[next3(p)] == marked_point);
  }
  return n;
}

void validate_triangulation(const Triangulation& t) {
  const ColoredSurface& s = t.surface;
  validate_surface(s);
  auto bad = [](const std::string& why) { fail(ErrorCode::InvalidGluing, why); };
  int n = t.num_arcs();
  if (n != arc_count(s))
    bad("triangulation has " + std::to_string(n) + " arcs, surface needs " + std::to_string(arc_count(s)));
  int mp = s.num_marked_points();
  int segs = s.num_boundary_segments();
  std::vector<int> seg_uses(segs, 0);
  for (const Triangle& tr : t.triangles)
    for (int p = 0; p < 3; ++p) {
      int side = tr.sides[p];
      if (tr.vertices[p] < 0 || tr.vertices[p] >= mp) bad("vertex out of range");
      if (side >= n) bad("arc label out of range");
      if (side < 0) {
        int seg = -1 - side;
        if (seg >= segs) bad("boundary segment out of range");
        ++seg_uses[seg];
        auto [a, b] = segment_ends(s, seg);
        if (tr.vertices[p] != a || tr.vertices[next3(p)] != b) bad("boundary segment endpoints disagree");
      }
    }
  for (int u : seg_uses)
    if (u != 1) bad("each boundary segment must bound exactly one triangle");
  auto slots = arc_slots(t);
  for (int a = 0; a < n; ++a) {
    if (slots[a].size() != 2) bad("arc " + t.arc_labels[a] + " is not glued in exactly two places");
    const Triangle& x = t.triangles[slots[a][0].tri];
    const Triangle& y = t.triangles[slots[a][1].tri];
    int px = slots[a][0].pos, py = slots[a][1].pos;
    if (x.vertices[px] != y.vertices[next3(py)] || x.vertices[next3(px)] != y.vertices[py])
      bad("arc " + t.arc_labels[a] + " glued with mismatched endpoints");
  }
  // Each marked point needs one cycle (puncture) or one fan (boundary) of corners.
  for (int v = 0; v < mp; ++v) {
    int total = 0;
    for (const Triangle& tr : t.triangles)
      for (int c = 0; c < 3; ++c) total += tr.vertices[c] == v;
    if (total == 0) bad("marked point " + std::to_string(v) + " is not a vertex");
    if (static_cast<int>(corners_around(t, slots, v).size()) != total)
      bad("neighbourhood of marked point " + std::to_string(v) + " is not a disk");
  }
  int chi = mp - (n + segs) + static_cast<int>(t.triangles.size());
  if (chi != 2 - 2 * s.genus - static_cast<int>(s.boundaries.size())) bad("Euler characteristic mismatch");
  // Connectedness through arcs.
  std::vector<char> seen(t.triangles.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int side : t.triangles[i].sides)
      if (side >= 0)
        for (const Slot& sl : slots[side])
          if (!seen[sl.tri]) {
            seen[sl.tri] = 1;
            stack.push_back(sl.tri);
          }
  }
  if (std::count(seen.begin(), seen.end(), 0) != 0) bad("triangulation is not connected");
}

const char* piece_kind_name(PieceKind k) {
  switch (k) {
    case PieceKind::P1: return "P1";
    case PieceKind::P2: return "P2";
    case PieceKind::P3: return "P3";
    case PieceKind::P4: return "P4";
  }
  return "?";
}

std::vector<Piece> puzzle_pieces(const Triangulation& t) {
  std::vector<SelfFolded> sf = self_folded_triangles(t);
  std::map<int, const SelfFolded*> by_loop;
  std::set<int> folded;
  std::vector<Piece> out;
  for (const SelfFolded& f : sf) {
    folded.insert(f.triangle);
    if (t.surface.color(f.puncture) == PunctureColor::II) out.push_back({PieceKind::P4, {f.triangle}});
    else by_loop[f.loop] = &f;
  }
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    if (folded.count(i)) continue;
    Piece p{PieceKind::P1, {i}};
    for (int side : t.triangles[i].sides) {
      auto it = by_loop.find(side);
      if (it != by_loop.end()) p.triangles.push_back(it->second->triangle);
    }
    p.kind = p.triangles.size() == 1 ? PieceKind::P1 : p.triangles.size() == 2 ? PieceKind::P2 : PieceKind::P3;
    if (p.triangles.size() > 3) fail(ErrorCode::UnknownConfiguration, "triangle bounded by three I-colored loops");
    out.push_back(std::move(p));
  }
  return out;
}

TaggedTriangulation plain(const Triangulation& t) {
  return {t, std::vector<char>(t.surface.punctures.size(), 0)};
}

const Triangulation& untag(const TaggedTriangulation& t) { return t.ideal; }

std::vector<TaggedArc> tagged_arcs(const TaggedTriangulation& tt) {
  const Triangulation& t = tt.ideal;
  auto slots = arc_slots(t);
  std::map<int, SelfFolded> by_loop;
  for (const SelfFolded& f : self_folded_triangles(t))
    if (t.surface.color(f.puncture) == PunctureColor::I) by_loop[f.loop] = f;
  std::vector<TaggedArc> out;
  for (int a = 0; a < t.num_arcs(); ++a) {
    auto it = by_loop.find(a);
    if (it != by_loop.end()) {
      // The loop stands for the enclosed arc notched at the puncture.
      const Triangle& tr = t.triangles[it->second.triangle];
      int base = tr.vertices[0] == it->second.puncture ? tr.vertices[1] : tr.vertices[0];
      out.push_back({{TaggedEnd{base, false}, TaggedEnd{it->second.puncture, true}}, a});
      continue;
    }
    const Triangle& tr = t.triangles[slots[a][0].tri];
    int p = slots[a][0].pos;
    TaggedArc ta;
    ta.underlying = a;
    for (int e = 0; e < 2; ++e) {
      int v = tr.vertices[e == 0 ? p : next3(p)];
      bool notch = t.surface.is_puncture(v) && tt.notched[t.surface.puncture_index(v)];
      ta.ends[e] = {v, notch};
    }
    out.push_back(ta);
  }
  return out;
}

namespace {

void swap_labels(Triangulation& t, int a, int b) {
  for (Triangle& tr : t.triangles)
    for (int& s : tr.sides) {
      if (s == a) s = b;
      else if (s == b) s = a;
    }
}

// Quadrilateral flip of an arc that is not enclosed in a self-folded triangle.
void ideal_flip(Triangulation& t, int e) {
  auto slots = arc_slots(t);
  Slot x = slots[e][0], y = slots[e][1];
  if (x.tri == y.tri) fail(ErrorCode::UnknownConfiguration, "arc " + t.arc_labels[e] + " has no flip in the ideal triangulation");
  auto rotated = [&](Slot sl) {
    const Triangle& tr = t.triangles[sl.tri];
    Triangle r;
    for (int i = 0; i < 3; ++i) {
      r.sides[i] = tr.sides[(sl.pos + i) % 3];
      r.vertices[i] = tr.vertices[(sl.pos + i) % 3];
    }
    return r;
  };
  Triangle a = rotated(x), b = rotated(y);
  // a: p -> q -> u (sides e, s1, s2); b: q -> p -> w (sides e, u1, u2).
  int p = a.vertices[0], q = a.vertices[1], u = a.vertices[2], w = b.vertices[2];
  Triangle n1{{a.sides[2], b.sides[1], e}, {u, p, w}};
  Triangle n2{{b.sides[2], a.sides[1], e}, {w, q, u}};
  t.triangles[x.tri] = n1;
  t.triangles[y.tri] = n2;
}

// Enforce the representation rule at I-punctures enclosed in self-folded triangles.
void normalize(TaggedTriangulation& tt) {
  for (const SelfFolded& f : self_folded_triangles(tt.ideal)) {
    if (tt.ideal.surface.color(f.puncture) != PunctureColor::I) continue;
    int idx = tt.ideal.surface.puncture_index(f.puncture);
    if (!tt.notched[idx]) continue;
    swap_labels(tt.ideal, f.loop, f.enclosed);
    tt.notched[idx] = 0;
  }
}

}  // namespace

TaggedTriangulation flip(const TaggedTriangulation& t, int k) {
  if (k < 0 || k >= t.ideal.num_arcs()) fail(ErrorCode::InvalidInput, "no arc with index " + std::to_string(k));
  TaggedTriangulation r = t;
  for (const SelfFolded& f : self_folded_triangles(t.ideal)) {
    if (f.enclosed != k) continue;
    int idx = t.ideal.surface.puncture_index(f.puncture);
    if (t.ideal.surface.color(f.puncture) == PunctureColor::II) {
      // The enclosed arc changes its tag at the II-puncture; nothing else moves.
      r.notched[idx] ^= 1;
      return r;
    }
    // Enclosed arc at an I-puncture: with all tags at the puncture changed it
    // is the loop, so flip the loop and change the tags back.
    swap_labels(r.ideal, f.loop, f.enclosed);
    ideal_flip(r.ideal, k);
    r.notched[idx] ^= 1;
    normalize(r);
    return r;
  }
  ideal_flip(r.ideal, k);
  normalize(r);
  return r;
}

std::string canonical_form(const TaggedTriangulation& tt) {
  const Triangulation& t = tt.ideal;
  auto slots = arc_slots(t);
  std::string best;
  int nt = static_cast<int>(t.triangles.size());
  for (int root = 0; root < nt; ++root)
    for (int rot = 0; rot < 3; ++rot) {
      std::vector<int> tri_id(nt, -1), entry(nt, 0), arc_id(t.num_arcs(), -1);
      std::queue<int> todo;
      tri_id[root] = 0;
      entry[root] = rot;
      todo.push(root);
      int next_tri = 1, next_arc = 0;
      std::string code;
      while (!todo.empty()) {
        int i = todo.front();
        todo.pop();
        const Triangle& tr = t.triangles[i];
        code += '(';
        for (int k = 0; k < 3; ++k) {
          int p = (entry[i] + k) % 3;
          int side = tr.sides[p];
          code += std::to_string(tr.vertices[p]);
          if (side < 0) {
            code += 'B' + std::to_string(-1 - side);
          } else {
            if (arc_id[side] < 0) arc_id[side] = next_arc++;
            code += 'a' + std::to_string(arc_id[side]);
            Slot o = other_slot(slots, side, {i, p});
            if (tri_id[o.tri] < 0) {
              tri_id[o.tri] = next_tri++;
              entry[o.tri] = o.pos;
              todo.push(o.tri);
            }
          }
          code += ',';
        }
        code += ')';
      }
      if (best.empty() || code < best) best = code;
    }
  best += '|';
  for (char c : tt.notched) best += c ? 'n' : 'p';
  return best;
}

// ---------------------------------------------------------------------------
// Quiver, homotopy generators and complex

namespace {

struct CornerArrows {
  // (triangle, corner) -> arrows (src arc, tgt arc, id); first is the primary one.
  std::map<std::pair<int, int>, std::vector<std::array<int, 3>>> at;
  ArrowId primary(int tri, int c) const {
    auto it = at.find({tri, c});
    return it == at.end() || it->second.empty() ? -1 : it->second[0][2];
  }
  ArrowId between(int tri, int c, int a, int b) const {
    auto it = at.find({tri, c});
    if (it == at.end()) return -1;
    for (const auto& x : it->second)
      if (x[0] == a && x[1] == b) return x[2];
    return -1;
  }
};

struct Glued {
  Quiver q;
  CornerArrows corners;
  std::vector<Walk> generators;
  std::vector<ArrowId> deleted;
  std::map<ArrowId, ArrowId> partner;  // deleted arrow -> opposite deleted arrow
  std::map<ArrowId, std::pair<int, int>> corner_of;
};

Glued glue(const Triangulation& t) {
  validate_triangulation(t);
  const ColoredSurface& s = t.surface;
  auto slots = arc_slots(t);
  std::vector<SelfFolded> sf = self_folded_triangles(t);
  std::map<int, const SelfFolded*> folded_tri;
  std::map<int, int> i_enclosed_by_loop;
  std::set<int> i_enclosed;
  for (const SelfFolded& f : sf) {
    folded_tri[f.triangle] = &f;
    if (s.color(f.puncture) == PunctureColor::I) {
      i_enclosed_by_loop[f.loop] = f.enclosed;
      i_enclosed.insert(f.enclosed);
    }
  }
  auto dup = [&](int side) {
    std::vector<int> d{side};
    auto it = i_enclosed_by_loop.find(side);
    if (it != i_enclosed_by_loop.end()) d.push_back(it->second);
    return d;
  };
  Glued g;
  g.q = Quiver(t.num_arcs());
  int counter = 0;
  auto add = [&](int tri, int c, int a, int b) {
    ArrowId id = g.q.add_arrow(a, b, arrow_name(counter++));
    g.corners.at[{tri, c}].push_back({a, b, id});
    g.corner_of[id] = {tri, c};
  };
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    const Triangle& tr = t.triangles[i];
    auto f = folded_tri.find(i);
    if (f != folded_tri.end()) {
      if (s.color(f->second->puncture) == PunctureColor::I) continue;
      // II-colored self-folded triangle: a 2-cycle between loop and enclosed arc.
      for (int c = 0; c < 3; ++c) {
        int a = tr.sides[prev3(c)], b = tr.sides[c];
        if (a != b) add(i, c, a, b);
      }
      continue;
    }
    for (int c = 0; c < 3; ++c) {
      int a = tr.sides[prev3(c)], b = tr.sides[c];
      if (a < 0 || b < 0) continue;
      for (int x : dup(a))
        for (int y : dup(b)) add(i, c, x, y);
    }
  }
  // Oriented 3-cycles of the pieces.
  for (int i = 0; i < static_cast<int>(t.triangles.size()); ++i) {
    if (folded_tri.count(i)) continue;
    const Triangle& tr = t.triangles[i];
    if (tr.sides[0] < 0 || tr.sides[1] < 0 || tr.sides[2] < 0) continue;
    for (int a : dup(tr.sides[0]))
      for (int b : dup(tr.sides[1]))
        for (int c : dup(tr.sides[2])) {
          Walk w{a, {{g.corners.between(i, 1, a, b), 1}, {g.corners.between(i, 2, b, c), 1},
                     {g.corners.between(i, 0, c, a), 1}}};
          g.generators.push_back(w);
        }
  }
  // Cycles around I-punctures of valency at least two.
  for (int pi = 0; pi < static_cast<int>(s.punctures.size()); ++pi) {
    if (s.punctures[pi] != PunctureColor::I) continue;
    int v = s.puncture_point(pi);
    if (valency(t, v) < 2) continue;
    std::vector<ArrowId> cyc;
    for (const Slot& c : corners_around(t, slots, v)) {
      auto f = folded_tri.find(c.tri);
      if (f != folded_tri.end() && s.color(f->second->puncture) == PunctureColor::I) continue;
      ArrowId a = g.corners.primary(c.tri, c.pos);
      if (a < 0) fail(ErrorCode::UnknownConfiguration, "puncture cycle meets a corner without an arrow");
      cyc.push_back(a);
    }
    // Start at the lowest arc not enclosed in a self-folded triangle.
    std::size_t start = 0;
    for (std::size_t j = 0; j < cyc.size(); ++j)
      if (g.q.arrow(cyc[j]).src < g.q.arrow(cyc[start]).src) start = j;
    Walk w{g.q.arrow(cyc[start]).src, {}};
    for (std::size_t j = 0; j < cyc.size(); ++j) w.steps.push_back({cyc[(start + j) % cyc.size()], 1});
    validate_walk(g.q, w);
    if (!is_closed(g.q, w)) fail(ErrorCode::UnknownConfiguration, "puncture cycle does not close");
    g.generators.push_back(w);
    // Digon around an I-puncture of valency two: the two corner arrows cancel.
    if (valency(t, v) == 2 && cyc.size() == 2) {
      const Arrow &x = g.q.arrow(cyc[0]), &y = g.q.arrow(cyc[1]);
      if (x.src != x.tgt && x.src == y.tgt && x.tgt == y.src && !i_enclosed.count(x.src) && !i_enclosed.count(x.tgt)) {
        g.deleted.push_back(cyc[0]);
        g.deleted.push_back(cyc[1]);
        g.partner[cyc[0]] = cyc[1];
        g.partner[cyc[1]] = cyc[0];
      }
    }
  }
  return g;
}

}  // namespace

SurfaceQuiver build_surface_quiver(const Triangulation& t) {
  Glued g = glue(t);
  SurfaceQuiver r;
  r.glued = g.q;
  r.quiver = g.q;
  r.glued_generators = g.generators;
  r.deleted = g.deleted;
  std::set<ArrowId> gone(g.deleted.begin(), g.deleted.end());
  for (ArrowId a : g.deleted) r.quiver.remove_arrow(a);
  // Replacement walk (in the reduced quiver) for a deleted arrow, taken from
  // the 3-cycle of its own triangle or of its partner's triangle.
  auto through_triangle = [&](ArrowId a) -> std::optional<Walk> {
    auto [tri, c] = g.corner_of.at(a);
    ArrowId b = g.corners.primary(tri, next3(c));
    ArrowId d = g.corners.primary(tri, prev3(c));
    const Triangle& tr = t.triangles[tri];
    if (tr.sides[0] < 0 || tr.sides[1] < 0 || tr.sides[2] < 0) return std::nullopt;
    if (b < 0 || d < 0 || gone.count(b) || gone.count(d)) return std::nullopt;
    return Walk{g.q.arrow(a).src, {{d, -1}, {b, -1}}};
  };
  std::map<ArrowId, std::optional<Walk>> repl;
  for (ArrowId a : g.deleted) {
    std::optional<Walk> w = through_triangle(a);
    if (!w) {
      std::optional<Walk> p = through_triangle(g.partner.at(a));
      if (p) w = inverse(r.quiver, *p);
    }
    repl[a] = w;
  }
  for (const Walk& y : g.generators) {
    Walk out = trivial_walk(y.start);
    bool ok = true;
    for (const Step& st : y.steps) {
      if (!gone.count(st.arrow)) {
        out = compose(r.quiver, arrow_walk(r.quiver, st.arrow, st.sign), out);
        continue;
      }
      const std::optional<Walk>& w = repl.at(st.arrow);
      if (!w) {
        ok = false;
        break;
      }
      out = compose(r.quiver, st.sign > 0 ? *w : inverse(r.quiver, *w), out);
    }
    if (ok && !out.trivial()) r.generators.push_back(out);
  }
  return r;
}

CellComplex2 build_surface_complex(const Triangulation& t) {
  SurfaceQuiver sq = build_surface_quiver(t);
  return build_complex(sq.glued, sq.glued_generators);
}

Pi1Report pi1_report(const CellComplex2& x) {
  Pi1Report r;
  r.euler_characteristic = x.euler_characteristic();
  r.presentations = complex_presentations(x);
  r.components = static_cast<int>(r.presentations.size());
  r.free = true;
  r.rank = 0;
  for (const Presentation& p : r.presentations) {
    NormalClosureSolver solver(p.num_generators, p.relators);
    Presentation red;
    red.num_generators = static_cast<int>(solver.surviving_generators().size());
    red.relators = solver.remaining_relators();
    if (!solver.exact()) r.free = false;
    r.rank += red.num_generators;
    r.reduced.push_back(std::move(red));
  }
  if (!r.free) r.rank = -1;
  return r;
}

HomotopyOracle surface_oracle(const Triangulation& t) {
  SurfaceQuiver sq = build_surface_quiver(t);
  HomotopyOracle g = HomotopyOracle::generated(sq.quiver, sq.generators);
  bool exact = true;
  for (int v = 0; v < sq.quiver.num_vertices(); ++v) exact = exact && g.decides_exactly(v);
  if (exact) return g;
  const ColoredSurface& s = t.surface;
  bool no_ii = std::count(s.punctures.begin(), s.punctures.end(), PunctureColor::II) == 0;
  if (s.boundaries.empty() && no_ii && s.genus == 1) return HomotopyOracle::abelian(sq.quiver, sq.generators);
  if (s.boundaries.empty() && no_ii && s.genus == 0) return HomotopyOracle::full(sq.quiver);
  return g;
}

bool verify_flip_mutation(const TaggedTriangulation& tt, int k) {
  TaggedTriangulation flipped = flip(tt, k);
  SurfaceQuiver before = build_surface_quiver(tt);
  SurfaceQuiver after = build_surface_quiver(flipped);
  HomotopyOracle oracle = surface_oracle(tt.ideal);
  TrackedQuiver mutated = mutate(init_tracked(before.quiver, oracle), k);
  const Quiver& target = mutated.current;
  const Quiver& q2 = after.quiver;
  if (!quiver_equal_fixed_vertices(q2, target)) return false;
  // Arrow classes by endpoints; try every bijection inside each class.
  std::map<std::pair<int, int>, std::pair<std::vector<ArrowId>, std::vector<ArrowId>>> classes;
  for (const Arrow& a : q2.arrows()) classes[{a.src, a.tgt}].first.push_back(a.id);
  for (const Arrow& a : target.arrows()) classes[{a.src, a.tgt}].second.push_back(a.id);
  std::vector<std::vector<ArrowId>*> perm;
  std::vector<std::vector<ArrowId>*> from;
  double combos = 1;
  for (auto& [key, c] : classes) {
    std::sort(c.second.begin(), c.second.end());
    from.push_back(&c.first);
    perm.push_back(&c.second);
    for (std::size_t i = 2; i <= c.second.size(); ++i) combos *= static_cast<double>(i);
  }
  if (combos > 1e6) fail(ErrorCode::ResourceLimit, "too many arrow bijections to test");
  std::map<Walk, Verdict, bool (*)(const Walk&, const Walk&)> cache(
      [](const Walk& a, const Walk& b) {
        if (a.start != b.start) return a.start < b.start;
        return std::lexicographical_compare(a.steps.begin(), a.steps.end(), b.steps.begin(), b.steps.end(),
                                            [](const Step& x, const Step& y) {
                                              return x.arrow != y.arrow ? x.arrow < y.arrow : x.sign < y.sign;
                                            });
      });
  while (true) {
    std::map<ArrowId, ArrowId> f;
    for (std::size_t c = 0; c < perm.size(); ++c)
      for (std::size_t i = 0; i < from[c]->size(); ++i) f[(*from[c])[i]] = (*perm[c])[i];
    bool ok = true;
    for (const Walk& y : after.generators) {
      Walk img{y.start, {}};
      for (const Step& s : y.steps) img.steps.push_back({f.at(s.arrow), s.sign});
      Walk base = reduce(mutated.translate(img));
      auto it = cache.find(base);
      Verdict v = it != cache.end() ? it->second : cache.emplace(base, oracle.verdict(base)).first->second;
      if (v == Verdict::Unknown) fail(ErrorCode::DecisionUnknown, "flip generator undecided by the surface oracle");
      if (v != Verdict::In) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
    // Advance the odometer of permutations.
    std::size_t c = 0;
    while (c < perm.size() && !std::next_permutation(perm[c]->begin(), perm[c]->end())) ++c;
    if (c == perm.size()) return false;
  }
}

int FlipGraph::num_edges() const {
  std::set<std::pair<int, int>> e;
  for (int v = 0; v < static_cast<int>(flips.size()); ++v)
    for (int w : flips[v])
      if (w >= 0) e.insert({std::min(v, w), std::max(v, w)});
  return static_cast<int>(e.size());
}

FlipGraph flip_graph(const TaggedTriangulation& start, int max_nodes) {
  FlipGraph g;
  std::map<std::string, int> index;
  g.nodes.push_back(start);
  g.flips.emplace_back(start.ideal.num_arcs(), -1);
  index[canonical_form(start)] = 0;
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
    for (int k = 0; k < start.ideal.num_arcs(); ++k) {
      TaggedTriangulation n = flip(g.nodes[v], k);
      std::string key = canonical_form(n);
      auto it = index.find(key);
      if (it != index.end()) {
        g.flips[v][k] = it->second;
        continue;
      }
      if (static_cast<int>(g.nodes.size()) >= max_nodes) {
        g.complete = false;
        continue;
      }
      int id = static_cast<int>(g.nodes.size());
      index.emplace(std::move(key), id);
      g.nodes.push_back(std::move(n));
      g.flips.emplace_back(start.ideal.num_arcs(), -1);
      g.flips[v][k] = id;
    }
  }
  return g;
}

// ---------------------------------------------------------------------------
// Builders

namespace {

std::vector<std::string> numbered(int n) {
  std::vector<std::string> v;
  for (int i = 1; i <= n; ++i) v.push_back(std::to_string(i));
  return v;
}

TaggedTriangulation finish(Triangulation t) {
  validate_triangulation(t);
  return plain(t);
}

}  // namespace

TaggedTriangulation once_punctured_torus(PunctureColor c) {
  Triangulation t;
  t.surface = {1, {}, {c}};
  t.arc_labels = numbered(3);
  t.triangles = {{{0, 1, 2}, {0, 0, 0}}, {{0, 1, 2}, {0, 0, 0}}};
  return finish(t);
}

TaggedTriangulation once_punctured_polygon(int m, PunctureColor c) {
  Triangulation t;
  t.surface = {0, {m}, {c}};
  t.arc_labels = numbered(m);
  int p = m;
  for (int i = 0; i < m; ++i) {
    int j = (i + 1) % m;
    t.triangles.push_back({{boundary_side(i), j, i}, {i, j, p}});
  }
  return finish(t);
}

TaggedTriangulation once_punctured_digon(PunctureColor c) { return once_punctured_polygon(2, c); }

TaggedTriangulation thrice_punctured_sphere() {
  Triangulation t;
  t.surface = {0, {}, {PunctureColor::II, PunctureColor::II, PunctureColor::II}};
  t.arc_labels = numbered(3);
  t.triangles = {{{0, 1, 2}, {0, 1, 2}}, {{2, 1, 0}, {0, 2, 1}}};
  return finish(t);
}

TaggedTriangulation twice_punctured_monogon(PunctureColor a, PunctureColor b) {
  // Labels follow the third puzzle piece: loops 2 and 4 enclosing arcs 3 and 5;
  // the outer side is the boundary segment.
  Triangulation t;
  t.surface = {0, {1}, {a, b}};
  t.arc_labels = {"2", "3", "4", "5"};
  t.triangles = {{{boundary_side(0), 2, 0}, {0, 0, 0}},
                 {{0, 1, 1}, {0, 0, 2}},
                 {{2, 3, 3}, {0, 0, 1}}};
  return finish(t);
}

TaggedTriangulation polygon(int m) {
  Triangulation t;
  t.surface = {0, {m}, {}};
  t.arc_labels = numbered(m - 3);
  for (int i = 0; i + 2 < m; ++i) {
    int s0 = i == 0 ? boundary_side(0) : i - 1;
    int s2 = i == m - 3 ? boundary_side(m - 1) : i;
    t.triangles.push_back({{s0, boundary_side(i + 1), s2}, {0, i + 1, i + 2}});
  }
  return finish(t);
}

}  // namespace hq
