#pragma once

#include <string>
#include <vector>

#include "hq/oracle.hpp"

namespace hq {

// A 2-cycle removed during mutation: gamma: j -> i, delta: i -> j, with the
// certificate that word(gamma)·word(delta) lies in the homotopy.
struct DeletionRecord {
  VertexId i = 0, j = 0;
  ArrowId gamma = -1, delta = -1;
  std::string gamma_label, delta_label;
  Membership membership;
};

// Current quiver whose arrows carry walks in the base quiver of the oracle.
// Membership questions are always asked about these base walks, so the
// homotopy never has to be re-presented after a mutation.
struct TrackedQuiver {
  Quiver current;
  HomotopyOracle oracle;
  std::vector<Walk> words;  // parallel to current.arrows()
  std::vector<VertexId> log;
  std::vector<DeletionRecord> deletions;  // from the most recent deletion step

  const Quiver& base() const { return oracle.quiver(); }
  const Walk& word(ArrowId a) const { return words[current.index_of(a)]; }
  // Base walk of a walk in the current quiver.
  Walk translate(const Walk& w) const;
};

TrackedQuiver init_tracked(const Quiver& q, const HomotopyOracle& oracle);
TrackedQuiver pre_mutate(const TrackedQuiver& t, VertexId k);
TrackedQuiver delete_two_cycles(const TrackedQuiver& t, VertexId k);
TrackedQuiver mutate(const TrackedQuiver& t, VertexId k);
TrackedQuiver mutation_sequence(const TrackedQuiver& t, const std::vector<VertexId>& ks);

// mu_k twice gives the same arrow counts and a matching of arrows whose base
// words agree modulo the homotopy.
bool check_involution(const TrackedQuiver& t, VertexId k);

struct PatternNode {
  std::vector<VertexId> address;  // mutation sequence from the root
  Quiver quiver;
  int parent = -1;
  int duplicate_of = -1;  // index of the earlier node with the same key
};

// Breadth-first exploration of the pattern on the n-regular tree up to
// `depth`, never undoing the previous step and not expanding duplicates.
std::vector<PatternNode> explore_pattern(const TrackedQuiver& t, int depth);

// Verdict string on all reduced closed walks of length <= 4 at vertex 0.
std::string homotopy_fingerprint(const TrackedQuiver& t, int max_length = 4);

bool maximal_homotopy_fz_equivalence(const Quiver& q, const std::vector<VertexId>& ks);
bool pi1_rank_monotonicity_check(const Quiver& q, int depth);

// Orbit mutation of `c` against homotopy mutation of `t` (whose oracle is the
// cover oracle of `c`), at one direction or along a sequence.
bool check_orbit_compatibility(const Covering& c, VertexId k, const TrackedQuiver& t);
bool check_orbit_compatibility_sequence(const Covering& c, const std::vector<VertexId>& ks,
                                        const TrackedQuiver& t);

}  // namespace hq
