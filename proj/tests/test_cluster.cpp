#include <doctest.h>

#include <functional>
#include <random>

#include "hq/cluster.hpp"
#include "hq/examples.hpp"
#include "support.hpp"

using namespace hq;

namespace {

std::vector<std::string> names(const Seed& s) { return s.variable_names(); }

std::string show(const Seed& s, int i) { return s.cluster[i].to_string(names(s)); }

mpq_class eval(const MultiPoly& p, const std::vector<mpq_class>& at) {
  mpq_class sum = 0;
  for (const auto& [e, c] : p.terms()) {
    mpq_class t = mpq_class(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < std::abs(e[i]); ++j) {
        if (e[i] > 0) t *= at[i];
        else t /= at[i];
      }
    sum += t;
  }
  return sum;
}

mpq_class eval(const RationalFn& r, const std::vector<mpq_class>& at) { return eval(r.num(), at) / eval(r.den(), at); }

// Every address of length 1..depth that never repeats a direction twice in a row.
void for_each_address(int n, int depth, const std::function<void(const std::vector<VertexId>&)>& f) {
  std::vector<VertexId> a;
  std::function<void()> rec = [&]() {
    if (!a.empty()) f(a);
    if (static_cast<int>(a.size()) == depth) return;
    for (VertexId k = 0; k < n; ++k) {
      if (!a.empty() && a.back() == k) continue;
      a.push_back(k);
      rec();
      a.pop_back();
    }
  };
  rec();
}

TrackedQuiver full(const Quiver& q) { return init_tracked(q, HomotopyOracle::full(q)); }

TrackedQuiver two_cycle_tracked() {
  Quiver q = two_cycle_quiver();
  return init_tracked(q, HomotopyOracle::generated(q, {two_cycle_square(q)}));
}

TrackedQuiver klein_tracked() {
  return init_tracked(triple_two_cycle_quiver(), HomotopyOracle::finite_cover(klein_four_cover()));
}

}  // namespace

TEST_CASE("semifield operations") {
  CHECK(semifield_plus({1, -2, 0}, {0, 3, -1}) == SemifieldElement{0, -2, -1});
  CHECK(semifield_times({1, -2}, {2, 2}) == SemifieldElement{3, 0});
  CHECK(semifield_power({1, -2}, -3) == SemifieldElement{-3, 6});
  CHECK(semifield_one(Semifield::tropical({"u", "v"})) == SemifieldElement{0, 0});
  CHECK(semifield_one(Semifield::trivial()).empty());
}

TEST_CASE("exchange examples") {
  Seed a2 = trivial_seed(full(a2_quiver()));
  CHECK(show(seed_mutate(a2, 0), 0) == "(x2 + 1)/x1");
  Seed c2 = trivial_seed(two_cycle_tracked());
  CHECK(show(seed_mutate(c2, 0), 0) == "2*x2/x1");
  Seed p2 = principal_seed(full(a2_quiver()));
  CHECK(show(seed_mutate(p2, 0), 0) == "(x2 + y1)/x1");
  Seed pc = principal_seed(two_cycle_tracked());
  Seed m = seed_mutate(pc, 0);
  RationalFn want = RationalFn(MultiPoly::variable(4, 1) * (MultiPoly::variable(4, 2) + MultiPoly::constant(4, 1)),
                               MultiPoly::variable(4, 0));
  CHECK(m.cluster[0] == want);
}

TEST_CASE("pentagon periodicity") {
  Seed s = trivial_seed(full(a2_quiver()));
  Seed t = seed_mutate_sequence(s, {0, 1, 0, 1, 0});
  CHECK(t.cluster[0] == s.cluster[1]);
  CHECK(t.cluster[1] == s.cluster[0]);
  std::vector<std::string> seen;
  Seed u = s;
  for (int i = 0; i < 5; ++i) {
    u = seed_mutate(u, i % 2);
    seen.push_back(show(u, i % 2));
  }
  CHECK(u.cluster == t.cluster);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  CHECK(seen.size() == 5);
}

TEST_CASE("exchange involution") {
  for (const TrackedQuiver& tq : {full(a3_quiver()), full(markov_quiver()), two_cycle_tracked(), klein_tracked()}) {
    for (bool principal : {false, true}) {
      Seed s = principal ? principal_seed(tq) : trivial_seed(tq);
      for_each_address(tq.current.num_vertices(), 2, [&](const std::vector<VertexId>& a) {
        Seed t = seed_mutate_sequence(s, a);
        for (VertexId k = 0; k < t.rank(); ++k) {
          Seed back = seed_mutate(seed_mutate(t, k), k);
          CHECK(back.cluster == t.cluster);
          CHECK(back.coeffs == t.coeffs);
          CHECK(check_involution(t.tq, k));
        }
      });
    }
  }
}

TEST_CASE("classical replay on 2-acyclic quivers") {
  std::mt19937_64 rng(51);
  std::vector<Quiver> qs = {a2_quiver(), a3_quiver(), kronecker_quiver(), three_cycle_quiver(), markov_quiver()};
  for (int i = 0; i < 3; ++i) qs.push_back(hqt::quiver_from_counts(hqt::random_counts(rng, 3, 1, false)));
  for (const Quiver& q : qs) {
    int n = q.num_vertices();
    std::vector<mpq_class> at(n);
    for (int i = 0; i < n; ++i) at[i] = mpq_class(2 + i, 1 + 2 * i) + 1;
    for (auto& x : at) x.canonicalize();
    Seed s = trivial_seed(full(q));
    int depth = q.num_arrows() >= 6 ? 4 : 6;
    for_each_address(n, depth, [&](const std::vector<VertexId>& a) {
      // Reference: the matrix rule applied to numbers.
      IntMatrix b = exchange_matrix(q);
      std::vector<mpq_class> x = at;
      for (VertexId k : a) {
        mpq_class plus = 1, minus = 1;
        for (int i = 0; i < n; ++i)
          for (int e = 0; e < std::abs(b[i][k]); ++e) (b[i][k] > 0 ? plus : minus) *= x[i];
        x[k] = (plus + minus) / x[k];
        b = hqt::reference_matrix_mutation(b, k);
      }
      Seed t = seed_mutate_sequence(s, a);
      for (int i = 0; i < n; ++i) CHECK(eval(t.cluster[i], at) == x[i]);
      CHECK(exchange_matrix(t.tq.current) == b);
    });
  }
}

TEST_CASE("y-hat commutation square") {
  for (const TrackedQuiver& tq : {full(a2_quiver()), full(a3_quiver()), two_cycle_tracked(), klein_tracked()}) {
    Seed s = principal_seed(tq);
    for_each_address(tq.current.num_vertices(), 3, [&](const std::vector<VertexId>& a) {
      Seed t = seed_mutate_sequence(s, std::vector<VertexId>(a.begin(), a.end() - 1));
      VertexId k = a.back();
      CHECK(y_hat(seed_mutate(t, k)) == y_mutate_field(y_hat(t), adjacency_matrix(t.tq.current), k));
    });
  }
  // No arrows: y-hat is y.
  Seed iso = principal_seed(full(Quiver(2)));
  auto yh = y_hat(iso);
  CHECK(yh[0] == RationalFn::variable(4, 2));
  CHECK(yh[1] == RationalFn::variable(4, 3));
}

TEST_CASE("F-polynomials and g-vectors") {
  Seed a2 = principal_seed(full(a2_quiver()));
  CHECK(f_polynomial(a2, {}, 0) == RationalFn(MultiPoly::constant(4, 1)));
  RationalFn f = f_polynomial(a2, {0}, 0);
  CHECK(f == RationalFn(MultiPoly::variable(4, 2) + MultiPoly::constant(4, 1)));
  CHECK(g_vector(a2, {}, 1) == std::vector<std::int64_t>{0, 1});
  CHECK(g_vector(a2, {0}, 0) == std::vector<std::int64_t>{-1, 1});
  Seed c2 = principal_seed(two_cycle_tracked());
  CHECK(g_vector(c2, {0}, 0) == std::vector<std::int64_t>{-1, 1});
  RationalFn fc = f_polynomial(c2, {0}, 0);
  CHECK(fc == RationalFn(MultiPoly::variable(4, 2) + MultiPoly::constant(4, 1)));
  // At y = 1 the F-polynomial takes the value 2 seen with trivial coefficients.
  CHECK(monomial_substitute(fc, {{0}, {0}, {0}, {0}}, 1) == RationalFn(MultiPoly::constant(1, 2)));
}

TEST_CASE("separation and homogeneity at depth 4") {
  for (const TrackedQuiver& tq : {full(a2_quiver()), two_cycle_tracked(), klein_tracked()}) {
    int n = tq.current.num_vertices();
    Seed principal = principal_seed(tq);
    Seed trivial = trivial_seed(tq);
    std::vector<SemifieldElement> c;
    for (int i = 0; i < n; ++i) {
      SemifieldElement e(2, 0);
      e[i % 2] = 1;
      e[(i + 1) % 2] = -(i % 3);
      c.push_back(e);
    }
    Seed tropical = initial_seed(tq, Semifield::tropical({"u1", "u2"}), c);
    int depth = n == 3 ? 3 : 4;
    for_each_address(n, depth, [&](const std::vector<VertexId>& a) {
      for (int i = 0; i < n; ++i) {
        CHECK(separation_check(trivial, a, i));
        CHECK(separation_check(principal, a, i));
        CHECK(separation_check(tropical, a, i));
        CHECK_NOTHROW(g_vector(principal, a, i));
      }
    });
  }
}

TEST_CASE("Laurent phenomenon for the covering-backed seed") {
  LaurentReport r = explore_laurent(principal_seed(klein_tracked()), 4, true);
  CHECK(r.all_laurent);
  CHECK(r.all_nonnegative);
  CHECK(r.findings.empty());
  CHECK(r.nodes.size() == 3 + 3 * 2 + 3 * 4 + 3 * 8);
  for (const LaurentNode& node : r.nodes) {
    CHECK(node.g.has_value());
    CHECK(node.f.has_value());
  }
  LaurentReport rnd = explore_laurent(trivial_seed(klein_tracked()), 5, false, 10, 7);
  CHECK(rnd.all_laurent);
  LaurentReport again = explore_laurent(trivial_seed(klein_tracked()), 5, false, 10, 7);
  REQUIRE(again.nodes.size() == rnd.nodes.size());
  for (std::size_t i = 0; i < rnd.nodes.size(); ++i) CHECK(again.nodes[i].address == rnd.nodes[i].address);
}

TEST_CASE("Laurent test on single expressions") {
  MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1), one = MultiPoly::constant(2, 1);
  CHECK(is_laurent(RationalFn(one + x2, x1)));
  CHECK_FALSE(is_laurent(RationalFn(one + x2, one + x1)));
}

TEST_CASE("resource limits") {
  Quiver big(kMaxClusterRank + 1);
  CHECK_THROWS_AS(trivial_seed(full(big)), Error);
  Seed s = trivial_seed(full(a2_quiver()));
  std::vector<VertexId> path;
  for (int i = 0; i <= kMaxClusterDepth; ++i) path.push_back(i % 2);
  CHECK_THROWS_AS(seed_mutate_sequence(s, path), Error);
  CHECK_THROWS_AS(explore_laurent(s, kMaxClusterDepth + 1, true), Error);
}
