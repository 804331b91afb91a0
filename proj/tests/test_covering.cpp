#include <doctest.h>

#include <random>
#include <set>

#include "hq/examples.hpp"
#include "hq/tracked.hpp"
#include "support.hpp"

using namespace hq;

namespace {

// Deck element checked directly: bijective on vertices and arrows, respects
// incidence and the projection.
bool is_automorphism_over_base(const Covering& c, const DeckElement& g) {
  const Quiver& t = c.total;
  std::vector<char> hitv(t.num_vertices(), 0);
  for (VertexId v = 0; v < t.num_vertices(); ++v) {
    VertexId w = g.vperm[v];
    if (w < 0 || w >= t.num_vertices() || hitv[w]++) return false;
    if (c.vmap[w] != c.vmap[v]) return false;
  }
  std::set<ArrowId> hita;
  for (std::size_t i = 0; i < t.arrows().size(); ++i) {
    const Arrow& a = t.arrows()[i];
    const Arrow& b = t.arrow(g.aperm[i]);
    if (!hita.insert(b.id).second) return false;
    if (b.src != g.vperm[a.src] || b.tgt != g.vperm[a.tgt]) return false;
    if (c.base_arrow(b.id) != c.amap[i]) return false;
  }
  return true;
}

std::vector<Covering> sample_covers() {
  return {two_cycle_double_cover(), hexagon_cover(), klein_four_cover(), mutable_not_sufficient_cover(),
          identity_covering(markov_quiver())};
}

}  // namespace

TEST_CASE("covering checks") {
  for (const Covering& c : sample_covers()) CHECK(check_covering(c).ok);
  Covering bad = hexagon_cover();
  bad.vmap[0] = 1 - bad.vmap[0];
  CHECK_FALSE(check_covering(bad).ok);
  CHECK_FALSE(check_covering(bad).violation.empty());
  Covering missing = two_cycle_double_cover();
  Quiver fewer(missing.total.num_vertices());
  for (std::size_t i = 1; i < missing.total.arrows().size(); ++i) {
    const Arrow& a = missing.total.arrows()[i];
    fewer.add_arrow_with_id(a.id, a.src, a.tgt, a.label);
  }
  missing.total = fewer;
  missing.amap.erase(missing.amap.begin());
  CHECK_FALSE(check_covering(missing).ok);
}

TEST_CASE("fibers and lifts") {
  Covering c = hexagon_cover();
  CHECK(c.total.num_vertices() == 6);
  CHECK(c.fiber(0).size() == 3);
  LiftTable lt(c);
  Walk sq = two_cycle_square(c.base);
  Walk once = walk_from_labels(c.base, {"b", "a"});
  for (VertexId x : c.fiber(0)) {
    VertexId y = lt.lift_endpoint(x, once);
    CHECK(y != x);
    CHECK(c.vmap[y] == 0);
    CHECK(lt.lift_endpoint(x, power(c.base, once, 3)) == x);
    CHECK(lt.lift_endpoint(x, sq) != x);
    Walk l = lt.lift(x, once);
    CHECK(l.length() == 2);
  }
}

TEST_CASE("deck groups") {
  CHECK(deck_group(two_cycle_double_cover()).size() == 2);
  CHECK(deck_group(hexagon_cover()).size() == 3);
  CHECK(deck_group(klein_four_cover()).size() == 4);
  for (const Covering& c : sample_covers()) {
    auto d = deck_transformations(c);
    for (const DeckElement& g : d) {
      CHECK(is_automorphism_over_base(c, g));
      CHECK(is_deck_element(c, g));
    }
    CHECK(is_regular(c));
    CHECK(d.size() == c.fiber(0).size());
  }
}

TEST_CASE("a non-normal covering is not regular") {
  // Sheets {0,1,2} with S3 acting through a transposition and a 3-cycle.
  Quiver q = markov_quiver();
  Covering c = build_regular_cover(q, {{1, 0, 2}, {1, 2, 0}, {0, 1, 2}, {0, 1, 2}});
  CHECK(check_covering(c).ok);
  CHECK_FALSE(is_regular(c));
  CHECK(deck_transformations(c).size() == 1);
}

TEST_CASE("weak admissibility") {
  CHECK(is_weakly_admissible(hexagon_cover()));
  CHECK_FALSE(is_admissible(hexagon_cover()));
  CHECK(is_weakly_admissible(klein_four_cover()));
  CHECK(is_admissible(identity_covering(markov_quiver())));
  // Total quiver with a 2-cycle.
  Quiver base = hqt::make_quiver(2, {{0, 1, "a"}, {1, 0, "b"}, {0, 1, "c"}});
  Covering tc = build_regular_cover(base, {{0, 1}, {1, 0}});
  CHECK(check_covering(tc).ok);
  CHECK_FALSE(is_weakly_admissible(tc));
}

TEST_CASE("orbit mutation of the hexagon creates a loop") {
  Covering c = hexagon_cover();
  Covering m = orbit_mutate(c, 0);
  CHECK(check_covering(m).ok);
  CHECK_FALSE(is_loop_free(m.base));
  int loops = 0;
  for (const Arrow& a : m.base.arrows())
    if (a.src == a.tgt) {
      ++loops;
      CHECK(a.src == 1);
    }
  CHECK(loops == 1);
  CHECK_FALSE(is_k_mutable(c, 0));
  CHECK_FALSE(is_k_mutable(c, 1));
  CHECK_FALSE(sufficient_k_mutable(c, 0));
  CHECK_FALSE(check_global_bounded(c, 2).ok);
}

TEST_CASE("double cover of the 2-cycle is global") {
  Covering c = two_cycle_double_cover();
  CHECK(is_k_mutable(c, 0));
  CHECK(sufficient_k_mutable(c, 0));
  GlobalCheck g = check_global_bounded(c, 6);
  CHECK(g.ok);
  CHECK(g.nodes_visited > 0);
}

TEST_CASE("mutable without the sufficient 2-cycle condition") {
  Covering c = mutable_not_sufficient_cover();
  CHECK(is_weakly_admissible(c));
  for (VertexId k = 0; k < 2; ++k) {
    CHECK(is_k_mutable(c, k));
    CHECK_FALSE(sufficient_k_mutable(c, k));
    CHECK(is_weakly_admissible(orbit_mutate(c, k)));
  }
  CHECK(check_global_bounded(c, 4).ok);
}

TEST_CASE("the Klein-four covering is globally weakly admissible") {
  Covering c = klein_four_cover();
  CHECK(c.total.num_vertices() == 12);
  CHECK(c.total.num_arrows() == 24);
  for (VertexId k = 0; k < 3; ++k) CHECK(sufficient_k_mutable(c, k));
  CHECK(check_global_bounded(c, 4).ok);
}

TEST_CASE("orbit mutation is equivariant and quotients to homotopy mutation") {
  std::mt19937_64 rng(31);
  std::vector<Covering> covers = {two_cycle_double_cover(), klein_four_cover(), mutable_not_sufficient_cover()};
  for (const Covering& c0 : covers) {
    for (int trial = 0; trial < 6; ++trial) {
      Covering c = c0;
      TrackedQuiver t = init_tracked(c0.base, HomotopyOracle::finite_cover(c0));
      std::vector<VertexId> ks;
      for (int step = 0; step < 4; ++step) {
        VertexId k = static_cast<VertexId>(rng() % c.base.num_vertices());
        if (!is_k_mutable(c, k)) break;
        ks.push_back(k);
        Covering m = orbit_mutate(c, k);
        REQUIRE(check_covering(m).ok);
        CHECK(m.total.num_vertices() == c.total.num_vertices());
        auto deck = deck_transformations(m);
        CHECK(deck.size() == deck_transformations(c).size());
        for (const DeckElement& g : deck) CHECK(is_automorphism_over_base(m, g));
        t = mutate(t, k);
        CHECK(adjacency_matrix(m.base) == adjacency_matrix(t.current));
        c = m;
      }
      CHECK(check_orbit_compatibility_sequence(c0, ks, init_tracked(c0.base, HomotopyOracle::finite_cover(c0))));
    }
  }
}

TEST_CASE("orbit mutation is independent of the order within the orbit") {
  // Mutating the fiber vertices one at a time by the matrix rule, in any
  // order, gives the orbit mutation's total quiver.
  std::mt19937_64 rng(32);
  for (const Covering& c : {two_cycle_double_cover(), klein_four_cover()}) {
    for (VertexId k = 0; k < c.base.num_vertices(); ++k) {
      IntMatrix want = exchange_matrix(orbit_mutate(c, k).total);
      std::vector<VertexId> fiber = c.fiber(k);
      for (int trial = 0; trial < 4; ++trial) {
        std::shuffle(fiber.begin(), fiber.end(), rng);
        IntMatrix b = exchange_matrix(c.total);
        for (VertexId v : fiber) b = hqt::reference_matrix_mutation(b, v);
        CHECK(b == want);
      }
    }
  }
}

TEST_CASE("tracked orbit mutation carries base words") {
  Covering c = klein_four_cover();
  std::vector<Walk> words;
  for (const Arrow& a : c.base.arrows()) words.push_back(arrow_walk(c.base, a.id));
  TrackedOrbitResult r = orbit_mutate_tracked(c, 1, c.base, words);
  REQUIRE(r.base_words.size() == r.covering.base.arrows().size());
  TrackedQuiver t = mutate(init_tracked(c.base, HomotopyOracle::finite_cover(c)), 1);
  CHECK(adjacency_matrix(r.covering.base) == adjacency_matrix(t.current));
  for (std::size_t i = 0; i < r.base_words.size(); ++i) {
    const Arrow& a = r.covering.base.arrows()[i];
    const Walk& w = r.base_words[i];
    CHECK(walk_source(c.base, w) == a.src);
    CHECK(walk_target(c.base, w) == a.tgt);
  }
}
