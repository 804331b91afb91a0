#pragma once

#include <string>
#include <vector>

#include "hq/walk.hpp"

namespace hq {

// Element of a free group: letters are +(g+1) for generator g and -(g+1) for
// its inverse.
using Word = std::vector<int>;

inline int letter(int gen, int sign) { return sign > 0 ? gen + 1 : -(gen + 1); }
inline int letter_gen(int l) { return (l > 0 ? l : -l) - 1; }

Word word_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_mul(const Word& a, const Word& b);  // reduced a·b (a written first)
Word word_pow(const Word& w, int e);
Word word_conj(const Word& g, const Word& w);  // g w g^{-1}
// Cyclically reduced core: w = c · core · c^{-1}.
Word cyclic_core(const Word& w, Word* conjugator = nullptr);
Word rotate(const Word& w, std::size_t r);  // w[r..] w[..r]
// Least rotation (lexicographic), used as a canonical representative of a cyclic word.
Word min_rotation(const Word& w);
// Substitute each generator g by images[g] (a word in another free group).
Word word_substitute(const Word& w, const std::vector<Word>& images);
std::vector<long> word_abelianize(const Word& w, int rank);

// Spanning forest (BFS from the lowest unvisited vertex, arrows by ascending
// id) together with the induced free bases of the vertex groups.
class GroupoidFrame {
 public:
  GroupoidFrame() = default;
  explicit GroupoidFrame(const Quiver& q);

  const Quiver& quiver() const { return q_; }
  int num_components() const { return static_cast<int>(roots_.size()); }
  int component_of(VertexId v) const { return comp_[v]; }
  VertexId root(int component) const { return roots_[component]; }
  const std::vector<ArrowId>& tree_arrows() const { return tree_; }
  bool is_tree_arrow(ArrowId a) const;

  // Free generators, one per chord; generator_component gives its component.
  int num_generators() const { return static_cast<int>(chords_.size()); }
  ArrowId chord(int g) const { return chords_[g]; }
  int generator_of(ArrowId a) const;  // -1 for tree arrows
  int generator_component(int g) const { return comp_[q_.arrow(chords_[g]).src]; }
  std::vector<int> generators_in_component(int component) const;

  // Reduced walk in the tree from the component root to v.
  const Walk& tree_path(VertexId v) const { return paths_[v]; }

  // Closed walk at v -> element of the free group at the component root
  // (conjugation by the tree path; tree letters vanish).
  Word to_word(const Walk& closed) const;
  // Any walk -> chord letters along it (tree letters vanish).
  Word chord_letters(const Walk& w) const;
  // Element at the root of `component` -> reduced closed walk at that root.
  Walk to_walk(const Word& w, int component) const;
  // Closed walk at the root representing generator g.
  Walk generator_walk(int g) const;
  // Path from the root to v followed by w and back: T_v^{-1} w T_v as a walk at the root.
  Walk transport_to_root(const Walk& closed) const;

 private:
  Quiver q_;
  std::vector<int> comp_;
  std::vector<VertexId> roots_;
  std::vector<ArrowId> tree_;
  std::vector<char> is_tree_;  // indexed by arrow index
  std::vector<ArrowId> chords_;
  std::vector<int> gen_of_;  // indexed by arrow index
  std::vector<Walk> paths_;
};

std::vector<ArrowId> spanning_tree(const Quiver& q);
// |Q1| - |Q0| + #components, summed over components.
int fundamental_group_rank(const Quiver& q);
std::vector<int> fundamental_group_rank_per_component(const Quiver& q);
int connected_components(const Quiver& q, std::vector<int>* component = nullptr);

// Presentation of a fundamental group: free generators and relator words.
struct Presentation {
  int num_generators = 0;
  std::vector<Word> relators;
};

struct CellComplex2 {
  Quiver one_skeleton;
  std::vector<Walk> faces;  // boundary of each polygon
  int euler_characteristic() const {
    return one_skeleton.num_vertices() - one_skeleton.num_arrows() + static_cast<int>(faces.size());
  }
};

CellComplex2 build_complex(const Quiver& q, const std::vector<Walk>& faces);

// One presentation per component of the complex (generators = chords of the
// one-skeleton in that component, relators = transported face boundaries).
std::vector<Presentation> complex_presentations(const CellComplex2& x);

std::string word_to_string(const Word& w);

}  // namespace hq
