#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hq/errors.hpp"

namespace hq {

using VertexId = int;
using ArrowId = int;

inline constexpr int kMaxVertices = 64;

struct Arrow {
  ArrowId id = 0;
  VertexId src = 0;
  VertexId tgt = 0;
  std::string label;
};

bool operator==(const Arrow& a, const Arrow& b);

// Finite multi-digraph whose arrows are individually identified. Arrows are
// kept sorted by id; ids never get reused within one quiver value, so words
// that mention an arrow stay meaningful across edits.
class Quiver {
 public:
  Quiver() = default;
  explicit Quiver(int n_vertices);

  int num_vertices() const { return n_; }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  ArrowId add_arrow(VertexId src, VertexId tgt, std::string label = {});
  void add_arrow_with_id(ArrowId id, VertexId src, VertexId tgt, std::string label = {});
  void remove_arrow(ArrowId id);

  bool has_arrow(ArrowId id) const;
  const Arrow& arrow(ArrowId id) const;
  int index_of(ArrowId id) const;  // -1 when absent
  ArrowId next_id() const { return next_id_; }
  void reserve_ids(ArrowId next) { if (next > next_id_) next_id_ = next; }

  // First arrow whose label matches, or -1.
  ArrowId find_label(const std::string& label) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  int n_ = 0;
  ArrowId next_id_ = 0;
  std::vector<Arrow> arrows_;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

bool is_loop_free(const Quiver& q);
bool is_two_acyclic(const Quiver& q);
bool is_acyclic(const Quiver& q);

IntMatrix adjacency_matrix(const Quiver& q);
// b[i][j] = p[j][i] - p[i][j].
IntMatrix exchange_matrix(const Quiver& q);
IntMatrix fz_mutate_matrix(const IntMatrix& b, int k);
bool is_skew_symmetric(const IntMatrix& b);
// 2-acyclic quiver realising a skew-symmetric matrix (arrows i->j for b[j][i] > 0).
Quiver quiver_from_exchange_matrix(const IntMatrix& b);

bool quiver_equal_fixed_vertices(const Quiver& a, const Quiver& b);

std::string composite_label(const std::string& out_label, const std::string& in_label);
std::string reversed_label(const std::string& label);

// Provenance of an arrow in a pre-mutated quiver.
struct PremutationSource {
  enum class Kind { Kept, Reversed, Composite } kind = Kind::Kept;
  ArrowId first = -1;   // kept/reversed arrow, or the arrow leaving k for composites
  ArrowId second = -1;  // arrow entering k (composites only)
};

struct Premutation {
  Quiver quiver;
  std::vector<PremutationSource> source;  // parallel to quiver.arrows()
};

// Reverse every arrow at k and add a composite for each length-two path through
// k that is not a 2-cycle. Arrow ids of reversed arrows are preserved; new
// composites get fresh ids ordered by (outgoing id, incoming id).
Premutation premutate_with_sources(const Quiver& q, VertexId k);
Quiver fz_premutate(const Quiver& q, VertexId k);

// Pre-mutation followed by greedy removal of every 2-cycle not touching k
// (lowest ids first). Only meaningful for 2-acyclic input.
Quiver fz_mutate_quiver(const Quiver& q, VertexId k);

void check_vertex(const Quiver& q, VertexId v);

}  // namespace hq
