#include <doctest.h>

#include <set>

#include "hq/examples.hpp"
#include "support.hpp"

using namespace hq;
using hqt::make_quiver;

TEST_CASE("loop-freeness and 2-acyclicity") {
  CHECK(is_loop_free(Quiver(0)));
  CHECK(is_two_acyclic(Quiver(0)));
  Quiver loop = make_quiver(1, {{0, 0, "l"}});
  CHECK_FALSE(is_loop_free(loop));
  CHECK_FALSE(is_two_acyclic(loop));
  CHECK(is_loop_free(two_cycle_quiver()));
  CHECK_FALSE(is_two_acyclic(two_cycle_quiver()));
  CHECK(is_two_acyclic(markov_quiver()));
  CHECK(is_acyclic(a3_quiver()));
  CHECK_FALSE(is_acyclic(three_cycle_quiver()));
}

TEST_CASE("adjacency and exchange matrices") {
  Quiver q = a2_quiver();
  CHECK(adjacency_matrix(q) == IntMatrix{{0, 1}, {0, 0}});
  CHECK(exchange_matrix(q) == IntMatrix{{0, -1}, {1, 0}});
  IntMatrix p = adjacency_matrix(markov_quiver());
  CHECK(p == IntMatrix{{0, 2, 0}, {0, 0, 2}, {2, 0, 0}});
  for (const auto& row : exchange_matrix(markov_quiver()))
    for (std::size_t j = 0; j < row.size(); ++j) CHECK((row[j] == 0 || row[j] == 2 || row[j] == -2));
}

TEST_CASE("opposite quiver negates the exchange matrix") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix p = hqt::random_counts(rng, 4, 3, true);
    Quiver q = hqt::quiver_from_counts(p);
    Quiver op(q.num_vertices());
    for (const Arrow& a : q.arrows()) op.add_arrow(a.tgt, a.src, a.label);
    IntMatrix b = exchange_matrix(q), bo = exchange_matrix(op);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(bo[i][j] == -b[i][j]);
  }
}

TEST_CASE("matrices ignore arrow ids and labels") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    IntMatrix p = hqt::random_counts(rng, 4, 2, true);
    Quiver q = hqt::quiver_from_counts(p);
    std::vector<Arrow> arrows = q.arrows();
    std::shuffle(arrows.begin(), arrows.end(), rng);
    Quiver r(4);
    int c = 0;
    for (const Arrow& a : arrows) r.add_arrow(a.src, a.tgt, "r" + std::to_string(c++));
    CHECK(adjacency_matrix(r) == adjacency_matrix(q));
    CHECK(exchange_matrix(r) == exchange_matrix(q));
  }
}

TEST_CASE("pre-mutation of the oriented triangle") {
  Quiver q = three_cycle_quiver();
  Quiver m = fz_premutate(q, 1);
  std::multiset<std::tuple<int, int, std::string>> got, want = {
      {1, 0, "c*"}, {2, 1, "b*"}, {2, 0, "a"}, {0, 2, "[bc]"}};
  for (const Arrow& a : m.arrows()) got.insert({a.src, a.tgt, a.label});
  CHECK(got == want);
}

TEST_CASE("pre-mutation at an isolated vertex changes nothing") {
  Quiver q = make_quiver(3, {{0, 1, "a"}, {1, 0, "b"}});
  CHECK(fz_premutate(q, 2) == q);
}

TEST_CASE("pre-mutation arrow counts") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + trial % 4;
    IntMatrix p = hqt::random_counts(rng, n, 2, true);
    Quiver q = hqt::quiver_from_counts(p);
    for (int k = 0; k < n; ++k) {
      IntMatrix m = adjacency_matrix(fz_premutate(q, k));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          std::int64_t want;
          if (i == k && j == k) want = 0;
          else if (j == k) want = p[k][i];
          else if (i == k) want = p[j][k];
          else if (i == j) want = p[i][j];
          else want = p[i][j] + p[i][k] * p[k][j];
          CHECK(m[i][j] == want);
        }
    }
  }
}

TEST_CASE("matrix mutation examples") {
  CHECK(fz_mutate_matrix(IntMatrix{{0, -1}, {1, 0}}, 0) == IntMatrix{{0, 1}, {-1, 0}});
  IntMatrix b = exchange_matrix(markov_quiver());
  for (int k = 0; k < 3; ++k) {
    IntMatrix m = fz_mutate_matrix(b, k);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(m[i][j] == -b[i][j]);
  }
}

TEST_CASE("quiver mutation agrees with the matrix rule, exhaustive up to 4 vertices") {
  long checked = 0;
  for (int n = 2; n <= 4; ++n)
    hqt::for_each_skew_matrix(n, 3, [&](const IntMatrix& b) {
      Quiver q = quiver_from_exchange_matrix(b);
      REQUIRE(exchange_matrix(q) == b);
      for (int k = 0; k < n; ++k) {
        IntMatrix want = hqt::reference_matrix_mutation(b, k);
        CHECK(fz_mutate_matrix(b, k) == want);
        Quiver m = fz_mutate_quiver(q, k);
        CHECK(is_two_acyclic(m));
        CHECK(exchange_matrix(m) == want);
        CHECK(fz_mutate_matrix(want, k) == b);
        ++checked;
      }
    });
  CHECK(checked > 100000);
}

TEST_CASE("quiver mutation agrees with the matrix rule on random 5-vertex quivers") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    IntMatrix p = hqt::random_counts(rng, 5, 3, false);
    Quiver q = hqt::quiver_from_counts(p);
    IntMatrix b = exchange_matrix(q);
    for (int k = 0; k < 5; ++k) CHECK(exchange_matrix(fz_mutate_quiver(q, k)) == hqt::reference_matrix_mutation(b, k));
  }
}

TEST_CASE("equality with fixed vertices") {
  Quiver a2 = a2_quiver();
  CHECK(quiver_equal_fixed_vertices(a2, a2));
  CHECK_FALSE(quiver_equal_fixed_vertices(a2, make_quiver(2, {{1, 0, "a"}})));
  // Two different deletion choices in a pre-mutation: the survivors differ as
  // arrows but agree up to an isomorphism fixing the vertices.
  Quiver x = make_quiver(2, {{0, 1, "p"}, {0, 1, "q"}});
  Quiver y = make_quiver(2, {{0, 1, "q"}, {0, 1, "p"}});
  CHECK(quiver_equal_fixed_vertices(x, y));
}

TEST_CASE("input validation") {
  Quiver q(2);
  CHECK_THROWS_AS(q.add_arrow(0, 5), Error);
  CHECK_THROWS_AS(fz_premutate(q, 7), Error);
  CHECK_THROWS_AS(Quiver(kMaxVertices + 1), Error);
  Quiver loop = make_quiver(2, {{0, 0, "l"}});
  try {
    fz_premutate(loop, 1);
    FAIL("expected LoopPresent");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LoopPresent);
  }
}
