#include <doctest.h>

#include <algorithm>
#include <set>

#include "hq/examples.hpp"
#include "hq/surface.hpp"
#include "support.hpp"

using namespace hq;

namespace {

int expected_arcs(const ColoredSurface& s) {
  int b = static_cast<int>(s.boundaries.size());
  int p = static_cast<int>(s.punctures.size());
  return 6 * s.genus + 3 * b + 3 * p + s.num_boundary_points() - 6;
}

int expected_chi(const ColoredSurface& s) {
  int ii = static_cast<int>(std::count(s.punctures.begin(), s.punctures.end(), PunctureColor::II));
  return 2 - 2 * s.genus - static_cast<int>(s.boundaries.size()) - ii;
}

int complex_chi(const TaggedTriangulation& t) { return build_surface_complex(untag(t)).euler_characteristic(); }

struct FlipFailure {
  int node;
  int arc;
  friend auto operator<=>(const FlipFailure&, const FlipFailure&) = default;
};

std::vector<FlipFailure> failing_flips(const FlipGraph& g) {
  std::vector<FlipFailure> out;
  for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v)
    for (int k = 0; k < g.nodes[v].ideal.num_arcs(); ++k)
      if (!verify_flip_mutation(g.nodes[v], k)) out.push_back({v, k});
  return out;
}

int total_flips(const FlipGraph& g) {
  int n = 0;
  for (const auto& t : g.nodes) n += t.ideal.num_arcs();
  return n;
}

}  // namespace

TEST_CASE("arc counts") {
  std::vector<TaggedTriangulation> ts = {once_punctured_torus(PunctureColor::II), once_punctured_digon(PunctureColor::II),
                                         thrice_punctured_sphere(), twice_punctured_monogon(), polygon(6),
                                         once_punctured_polygon(4, PunctureColor::I)};
  for (const auto& t : ts) {
    CHECK(arc_count(t.ideal.surface) == expected_arcs(t.ideal.surface));
    CHECK(t.ideal.num_arcs() == expected_arcs(t.ideal.surface));
  }
  CHECK(arc_count(once_punctured_torus(PunctureColor::I).ideal.surface) == 3);
  CHECK(arc_count(once_punctured_digon(PunctureColor::I).ideal.surface) == 2);
  CHECK(arc_count(thrice_punctured_sphere().ideal.surface) == 3);
  CHECK(arc_count(twice_punctured_monogon().ideal.surface) == 4);
  CHECK(arc_count(polygon(6).ideal.surface) == 3);
}

TEST_CASE("excluded surfaces are rejected") {
  ColoredSurface sphere;
  sphere.punctures = {PunctureColor::I};
  CHECK_THROWS_AS(validate_surface(sphere), Error);
  ColoredSurface disk;
  disk.boundaries = {2};
  CHECK_THROWS_AS(validate_surface(disk), Error);
}

TEST_CASE("the once-punctured torus gives the doubled 3-cycle") {
  for (PunctureColor c : {PunctureColor::I, PunctureColor::II}) {
    SurfaceQuiver sq = build_surface_quiver(once_punctured_torus(c));
    IntMatrix p = adjacency_matrix(sq.quiver);
    CHECK(sq.quiver.num_arrows() == 6);
    // Equal to the doubled 3-cycle up to renumbering of the arcs.
    IntMatrix m = adjacency_matrix(markov_quiver());
    std::vector<int> perm = {0, 1, 2};
    bool found = false;
    do {
      bool same = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) same = same && p[perm[i]][perm[j]] == m[i][j];
      found = found || same;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(found);
  }
  // I-colored: both triangle 3-cycles and the puncture cycle generate H.
  CHECK(build_surface_quiver(once_punctured_torus(PunctureColor::I)).generators.size() == 3);
  CHECK(build_surface_quiver(once_punctured_torus(PunctureColor::II)).generators.size() == 2);
}

TEST_CASE("flips are involutions") {
  std::vector<TaggedTriangulation> ts = {once_punctured_torus(PunctureColor::I), once_punctured_digon(PunctureColor::II),
                                         once_punctured_digon(PunctureColor::I), thrice_punctured_sphere(),
                                         twice_punctured_monogon(), polygon(6), once_punctured_polygon(4, PunctureColor::II)};
  for (const auto& t : ts)
    for (int k = 0; k < t.ideal.num_arcs(); ++k) {
      TaggedTriangulation f = flip(t, k);
      validate_triangulation(f.ideal);
      // The torus has a single isomorphism class, so only there a flip returns to it.
      if (t.ideal.surface.genus == 0) CHECK(canonical_form(f) != canonical_form(t));
      CHECK(canonical_form(flip(f, k)) == canonical_form(t));
    }
}

TEST_CASE("flip graphs of the once-punctured digon") {
  FlipGraph ii = flip_graph(once_punctured_digon(PunctureColor::II), 100);
  CHECK(ii.complete);
  CHECK(ii.nodes.size() == 6);
  CHECK(ii.num_edges() == 6);
  FlipGraph i = flip_graph(once_punctured_digon(PunctureColor::I), 100);
  CHECK(i.complete);
  CHECK(i.nodes.size() == 4);
  CHECK(i.num_edges() == 4);
  for (const FlipGraph* g : {&ii, &i})
    for (const auto& row : g->flips) {
      CHECK(row.size() == 2);
      CHECK(row[0] != row[1]);
    }
}

TEST_CASE("polygon flip graphs are associahedra") {
  CHECK(flip_graph(polygon(5), 100).nodes.size() == 5);
  CHECK(flip_graph(polygon(6), 100).nodes.size() == 14);
  CHECK(flip_graph(polygon(7), 200).nodes.size() == 42);
}

TEST_CASE("the once-punctured torus has a single isomorphism class") {
  FlipGraph g = flip_graph(once_punctured_torus(PunctureColor::II), 50);
  CHECK(g.nodes.size() == 1);
  for (int k = 0; k < 3; ++k) CHECK(g.flips[0][k] == 0);
}

TEST_CASE("flip and mutation agree on the acceptance surfaces") {
  for (const auto& t : {once_punctured_digon(PunctureColor::II), once_punctured_digon(PunctureColor::I),
                        thrice_punctured_sphere(), once_punctured_torus(PunctureColor::II),
                        once_punctured_torus(PunctureColor::I), polygon(6), once_punctured_polygon(4, PunctureColor::II),
                        once_punctured_polygon(3, PunctureColor::I)}) {
    FlipGraph g = flip_graph(t, 500);
    REQUIRE(g.complete);
    CHECK(failing_flips(g).empty());
  }
}

TEST_CASE("flip and mutation on the twice-punctured monogon") {
  // Both punctures I: the piece with a boundary outer side carries no 3-cycle,
  // which leaves an extra free loop in X(T) on two triangulations.
  FlipGraph ii = flip_graph(twice_punctured_monogon(PunctureColor::I, PunctureColor::I), 500);
  REQUIRE(ii.complete);
  CHECK(ii.nodes.size() == 18);
  auto fails = failing_flips(ii);
  CHECK(fails.size() == 8);
  std::set<int> bad_nodes;
  for (const auto& f : fails) bad_nodes.insert(f.node);
  CHECK(bad_nodes == std::set<int>{0, 5});
  for (int v : bad_nodes) CHECK(complex_chi(ii.nodes[v]) == 0);
  // Every failing flip touches one of the nodes whose complex has the wrong chi.
  int off = 0;
  for (int v = 0; v < static_cast<int>(ii.nodes.size()); ++v)
    if (complex_chi(ii.nodes[v]) != expected_chi(ii.nodes[v].ideal.surface)) ++off;
  CHECK(off == 2);
  for (const auto& f : fails) {
    int w = ii.flips[f.node][f.arc];
    bool touches = complex_chi(ii.nodes[f.node]) != expected_chi(ii.nodes[f.node].ideal.surface) ||
                   complex_chi(ii.nodes[w]) != expected_chi(ii.nodes[w].ideal.surface);
    CHECK(touches);
  }

  // One II puncture: flipping the enclosed arc of the II self-folded triangle
  // only changes the tag, so the quiver is unchanged while mutation reverses the 2-cycle.
  FlipGraph mixed = flip_graph(twice_punctured_monogon(PunctureColor::II, PunctureColor::I), 500);
  REQUIRE(mixed.complete);
  CHECK(total_flips(mixed) == 96);
  auto mf = failing_flips(mixed);
  CHECK(mf.size() == 4);
  for (const auto& f : mf) {
    const TaggedTriangulation& t = mixed.nodes[f.node];
    bool enclosed_ii = false;
    for (const SelfFolded& s : self_folded_triangles(t.ideal))
      if (s.enclosed == f.arc && t.ideal.surface.color(s.puncture) == PunctureColor::II) enclosed_ii = true;
    CHECK(enclosed_ii);
    TaggedTriangulation g = flip(t, f.arc);
    CHECK(adjacency_matrix(build_surface_quiver(g).quiver) == adjacency_matrix(build_surface_quiver(t).quiver));
  }
}

TEST_CASE("Euler characteristic of the surface complex") {
  struct Case {
    TaggedTriangulation t;
    bool constant;
  };
  std::vector<Case> cases = {{once_punctured_digon(PunctureColor::II), true},
                             {once_punctured_torus(PunctureColor::II), true},
                             {once_punctured_torus(PunctureColor::I), true},
                             {thrice_punctured_sphere(), true},
                             {polygon(6), true},
                             {once_punctured_digon(PunctureColor::I), false}};
  for (const Case& c : cases) {
    FlipGraph g = flip_graph(c.t, 500);
    std::vector<int> chis;
    for (const auto& n : g.nodes) chis.push_back(complex_chi(n));
    CHECK(punctured_euler_characteristic(c.t.ideal.surface) == expected_chi(c.t.ideal.surface));
    bool all = std::all_of(chis.begin(), chis.end(), [&](int x) { return x == expected_chi(c.t.ideal.surface); });
    CHECK(all == c.constant);
    if (!c.constant) {
      std::sort(chis.begin(), chis.end());
      CHECK(chis == std::vector<int>{1, 1, 2, 2});
    }
  }
}

TEST_CASE("fundamental group of the surface complex") {
  Pi1Report torus = pi1_report(build_surface_complex(untag(once_punctured_torus(PunctureColor::II))));
  CHECK(torus.euler_characteristic == -1);
  CHECK(torus.components == 1);
  CHECK(torus.free);
  CHECK(torus.rank == 2);
  Pi1Report sphere = pi1_report(build_surface_complex(untag(thrice_punctured_sphere())));
  CHECK(sphere.free);
  CHECK(sphere.rank == 2);
  Pi1Report closed = pi1_report(build_surface_complex(untag(once_punctured_torus(PunctureColor::I))));
  CHECK(closed.euler_characteristic == 0);
  CHECK_FALSE(closed.free);
}

TEST_CASE("puzzle pieces") {
  auto count = [](const std::vector<Piece>& ps, PieceKind k) {
    return std::count_if(ps.begin(), ps.end(), [&](const Piece& p) { return p.kind == k; });
  };
  auto dig_i = puzzle_pieces(untag(once_punctured_digon(PunctureColor::I)));
  auto torus = puzzle_pieces(untag(once_punctured_torus(PunctureColor::II)));
  CHECK(count(torus, PieceKind::P1) == 2);
  CHECK(torus.size() == 2);
  (void)dig_i;
  FlipGraph g = flip_graph(once_punctured_digon(PunctureColor::II), 100);
  int p4 = 0;
  for (const auto& n : g.nodes) p4 += static_cast<int>(count(puzzle_pieces(untag(n)), PieceKind::P4));
  CHECK(p4 > 0);
}

TEST_CASE("surface oracle decides the generators") {
  for (const auto& t : {once_punctured_digon(PunctureColor::II), once_punctured_torus(PunctureColor::I),
                        once_punctured_torus(PunctureColor::II), thrice_punctured_sphere()}) {
    HomotopyOracle h = surface_oracle(untag(t));
    SurfaceQuiver sq = build_surface_quiver(t);
    for (const Walk& g : sq.generators) {
      Membership m = h.membership(g);
      CHECK(m.verdict == Verdict::In);
      CHECK(verify_membership(h, g, m));
    }
  }
}
