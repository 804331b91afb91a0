#include "hq/examples.hpp"

namespace hq {

namespace {

std::vector<std::vector<int>> cyclic_group(int m) {
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) mul[i][j] = (i + j) % m;
  return mul;
}

}  // namespace

Quiver three_cycle_quiver() {
  Quiver q(3);
  q.add_arrow(0, 1, "c");
  q.add_arrow(1, 2, "b");
  q.add_arrow(2, 0, "a");
  return q;
}

Walk three_cycle_walk(const Quiver& q) { return walk_from_labels(q, {"a", "b", "c"}); }

Quiver markov_quiver() {
  Quiver q(3);
  q.add_arrow(0, 1, "a1");
  q.add_arrow(0, 1, "a2");
  q.add_arrow(1, 2, "b1");
  q.add_arrow(1, 2, "b2");
  q.add_arrow(2, 0, "g1");
  q.add_arrow(2, 0, "g2");
  return q;
}

std::vector<std::vector<Walk>> markov_homotopy_generators(const Quiver& q) {
  auto w = [&](std::vector<std::string> labels) { return walk_from_labels(q, labels); };
  return {{},
          {w({"g1", "b1", "a1"})},
          {w({"g1", "b1", "a1"}), w({"g2", "b1", "a2"})},
          {w({"g1", "b1", "a1"}), w({"g2", "b2", "a2"})}};
}

Quiver two_cycle_quiver() {
  Quiver q(2);
  q.add_arrow(0, 1, "a");
  q.add_arrow(1, 0, "b");
  return q;
}

Walk two_cycle_square(const Quiver& q) { return walk_from_labels(q, {"b", "a", "b", "a"}); }

Covering two_cycle_double_cover() { return build_cover_from_group(two_cycle_quiver(), {1}, cyclic_group(2)); }

Covering hexagon_cover() { return build_cover_from_group(two_cycle_quiver(), {1}, cyclic_group(3)); }

Quiver triple_two_cycle_quiver() {
  Quiver q(3);
  q.add_arrow(0, 1, "a");
  q.add_arrow(1, 0, "b");
  q.add_arrow(1, 2, "c");
  q.add_arrow(2, 1, "d");
  q.add_arrow(0, 2, "e");
  q.add_arrow(2, 0, "f");
  return q;
}

std::vector<Walk> triple_two_cycle_relators(const Quiver& q) {
  auto w = [&](std::vector<std::string> labels) { return walk_from_labels(q, labels); };
  return {w({"a", "b", "a", "b"}), w({"c", "d", "c", "d"}), w({"e", "f", "e", "f"}),
          w({"f", "c", "a"}), w({"e", "b", "d"})};
}

Covering klein_four_cover() {
  // Z/2 x Z/2 as {0,1,2,3} under xor; chords b, c, d, f (the tree is a, e).
  std::vector<std::vector<int>> mul(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) mul[i][j] = i ^ j;
  return build_cover_from_group(triple_two_cycle_quiver(), {2, 1, 2, 1}, mul);
}

Covering mutable_not_sufficient_cover() {
  Quiver q(2);
  q.add_arrow(0, 1, "alpha1");
  q.add_arrow(0, 1, "alpha2");
  q.add_arrow(0, 1, "beta1");
  q.add_arrow(0, 1, "beta2");
  q.add_arrow(1, 0, "gamma");
  // Chords alpha2, beta1, beta2, gamma.
  return build_cover_from_group(q, {1, 1, 0, 1}, cyclic_group(3));
}

Quiver a2_quiver() {
  Quiver q(2);
  q.add_arrow(0, 1, "a");
  return q;
}

Quiver a3_quiver() {
  Quiver q(3);
  q.add_arrow(0, 1, "a");
  q.add_arrow(1, 2, "b");
  return q;
}

Quiver kronecker_quiver() {
  Quiver q(2);
  q.add_arrow(0, 1, "a1");
  q.add_arrow(0, 1, "a2");
  return q;
}

}  // namespace hq
