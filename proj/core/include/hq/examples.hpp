#pragma once

#include <vector>

#include "hq/oracle.hpp"

namespace hq {

// Worked examples shared by the CLI, the tests and the benchmarks.

// c: 0 -> 1, b: 1 -> 2, a: 2 -> 0.
Quiver three_cycle_quiver();
// The cycle abc as a closed walk at vertex 0.
Walk three_cycle_walk(const Quiver& q);

// Doubled 3-cycle: a1, a2: 0 -> 1, b1, b2: 1 -> 2, g1, g2: 2 -> 0.
Quiver markov_quiver();
// Generator sets of four homotopies: none, {g1 b1 a1}, {g1 b1 a1, g2 b1 a2},
// {g1 b1 a1, g2 b2 a2}.
std::vector<std::vector<Walk>> markov_homotopy_generators(const Quiver& q);

// a: 0 -> 1, b: 1 -> 0.
Quiver two_cycle_quiver();
// (ab)^2 at vertex 0.
Walk two_cycle_square(const Quiver& q);
// Double cover of the 2-cycle quiver (a 4-cycle) whose homotopy is <<(ab)^2>>.
Covering two_cycle_double_cover();
// Hexagon over the 2-cycle quiver (deck group Z/3); orbit mutation at 0 puts a loop at 1.
Covering hexagon_cover();

// Three vertices joined by three 2-cycles: a: 0 -> 1, b: 1 -> 0, c: 1 -> 2,
// d: 2 -> 1, e: 0 -> 2, f: 2 -> 0.
Quiver triple_two_cycle_quiver();
// abab, cdcd, efef, fca, ebd.
std::vector<Walk> triple_two_cycle_relators(const Quiver& q);
// Regular cover with deck group Z/2 x Z/2 realizing those relators (12 vertices).
Covering klein_four_cover();

// Four parallel arrows 0 -> 1 and one arrow back, covered with deck group Z/3:
// mutable at both vertices although no 2-cycle squares into the homotopy.
Covering mutable_not_sufficient_cover();

Quiver a2_quiver();            // 0 -> 1
Quiver a3_quiver();            // 0 -> 1 -> 2
Quiver kronecker_quiver();     // two arrows 0 -> 1

}  // namespace hq
