#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hq/walk.hpp"

namespace hq {

// Automorphism of a total quiver: vertex permutation and arrow permutation
// (arrow permutation indexed by arrow position, values are arrow ids).
struct DeckElement {
  std::vector<VertexId> vperm;
  std::vector<ArrowId> aperm;

  friend bool operator==(const DeckElement&, const DeckElement&) = default;
};

struct Covering {
  Quiver total;
  Quiver base;
  std::vector<VertexId> vmap;  // total vertex -> base vertex
  std::vector<ArrowId> amap;   // parallel to total.arrows(): base arrow id
  std::vector<DeckElement> deck;  // optional explicit deck action (empty = compute)

  ArrowId base_arrow(ArrowId total_arrow) const { return amap[total.index_of(total_arrow)]; }
  std::vector<VertexId> fiber(VertexId base_vertex) const;
};

struct CoveringCheck {
  bool ok = true;
  std::string violation;  // first violated condition
};

CoveringCheck check_covering(const Covering& c);
bool validate_covering(const Covering& c);

// Lift tables: the unique total arrow over `base_arrow` leaving (or entering) x.
class LiftTable {
 public:
  LiftTable() = default;
  explicit LiftTable(const Covering& c);
  // -1 when no lift exists (invalid covering or wrong fiber).
  ArrowId lift_step(VertexId x, const Step& base_step) const;
  // End vertex of the lift of w starting at x, or -1.
  VertexId lift_endpoint(VertexId x, const Walk& w) const;
  // Full lifted walk; throws InvalidCovering when the lift breaks.
  Walk lift(VertexId x, const Walk& w) const;

 private:
  const Quiver* total_ = nullptr;
  const Quiver* base_ = nullptr;
  std::vector<std::map<ArrowId, ArrowId>> out_, in_;
};

std::vector<DeckElement> deck_transformations(const Covering& c);
bool is_regular(const Covering& c);
// Deck elements: explicit list if present and valid, otherwise computed.
std::vector<DeckElement> deck_group(const Covering& c);
bool is_deck_element(const Covering& c, const DeckElement& g);

bool is_weakly_admissible(const Covering& c);
bool is_admissible(const Covering& c);

Covering identity_covering(const Quiver& q);

// Regular covering with vertex set Q0 x {0..m-1}: tree arrows lift to the
// same sheet, chord g sends sheet s to perms[g][s].
Covering build_regular_cover(const Quiver& q, const std::vector<std::vector<int>>& perms);
// Same but generated by a group given as the regular action of a finite group
// on itself: `images[g]` is the element for chord g, `mul` the multiplication table.
Covering build_cover_from_group(const Quiver& q, const std::vector<int>& images,
                                const std::vector<std::vector<int>>& mul);

// Orbit pre-mutation / mutation at base vertex k.
Covering orbit_premutate(const Covering& c, VertexId k);
Covering orbit_mutate(const Covering& c, VertexId k);

// Orbit mutation that also carries, for each base arrow, a walk in some fixed
// reference quiver (reversal = inverse, composite = composition).
struct TrackedOrbitResult {
  Covering covering;
  std::vector<Walk> base_words;  // parallel to covering.base.arrows()
};
TrackedOrbitResult orbit_mutate_tracked(const Covering& c, VertexId k, const Quiver& word_quiver,
                                        const std::vector<Walk>& base_words);

bool is_k_mutable(const Covering& c, VertexId k);
bool sufficient_k_mutable(const Covering& c, VertexId k);

struct GlobalCheck {
  bool ok = true;
  std::vector<VertexId> counterexample;
  std::size_t nodes_visited = 0;
};
GlobalCheck check_global_bounded(const Covering& c, int depth);

}  // namespace hq
