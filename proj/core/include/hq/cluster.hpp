#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hq/poly.hpp"
#include "hq/tracked.hpp"

namespace hq {

// Coefficient semifield. Tropical elements are exponent vectors over the
// generators; the trivial semifield has no generators and one element.
struct Semifield {
  enum class Kind { Trivial, Tropical };
  Kind kind = Kind::Trivial;
  std::vector<std::string> generators;

  static Semifield trivial() { return {}; }
  static Semifield tropical(std::vector<std::string> gens) { return {Kind::Tropical, std::move(gens)}; }
  int size() const { return static_cast<int>(generators.size()); }
};

using SemifieldElement = Exponents;

SemifieldElement semifield_one(const Semifield& p);
SemifieldElement semifield_plus(const SemifieldElement& a, const SemifieldElement& b);  // coordinatewise min
SemifieldElement semifield_times(const SemifieldElement& a, const SemifieldElement& b);
SemifieldElement semifield_power(const SemifieldElement& a, std::int64_t k);

// Cluster variables are rational functions over the roster x_1..x_n followed
// by the semifield generators.
struct Seed {
  std::vector<RationalFn> cluster;
  Semifield semifield;
  std::vector<SemifieldElement> coeffs;
  TrackedQuiver tq;
  bool principal = false;
  IntMatrix initial_adjacency;    // of the quiver at the initial seed
  std::vector<VertexId> address;  // mutations applied since the initial seed

  int rank() const { return static_cast<int>(cluster.size()); }
  int roster_size() const { return rank() + semifield.size(); }
  std::vector<std::string> variable_names() const;
};

inline constexpr int kMaxClusterRank = 6;
inline constexpr int kMaxClusterDepth = 8;

Seed initial_seed(const TrackedQuiver& tq, const Semifield& p, std::vector<SemifieldElement> coeffs);
Seed trivial_seed(const TrackedQuiver& tq);
// Trop(y_1..y_n) with y_t0 = (y_1..y_n).
Seed principal_seed(const TrackedQuiver& tq);

Seed seed_mutate(const Seed& s, VertexId k);
Seed seed_mutate_sequence(const Seed& s, const std::vector<VertexId>& ks);

// y_hat_j = y_j prod_i x_i^(p_ij - p_ji), as elements of the ambient field.
std::vector<RationalFn> y_hat(const Seed& s);
// The Y-mutation rule in the ambient field, with p the adjacency before mutation.
std::vector<RationalFn> y_mutate_field(const std::vector<RationalFn>& y, const IntMatrix& p, VertexId k);

// Cluster variable i after the mutations in `address` from a principal seed,
// with the x variables specialized to 1.
RationalFn f_polynomial(const Seed& principal, const std::vector<VertexId>& address, int i);

// x_{i,t} == X_{i,t}(x; y) / F_{i,t}|_P(y) for the initial seed s over any semifield.
bool separation_check(const Seed& s, const std::vector<VertexId>& address, int i);

// Degree of X_{i,t} under deg x_i = e_i, deg y_j = (p_ji - p_ij)_i; throws NotHomogeneous.
std::vector<std::int64_t> g_vector(const Seed& principal, const std::vector<VertexId>& address, int i);
std::vector<std::int64_t> g_vector_of(const Seed& principal, const RationalFn& x);

struct LaurentNode {
  std::vector<VertexId> address;
  int variable = 0;  // index of the variable created by the last mutation
  std::string value;
  bool laurent = false;
  bool nonnegative = false;
  std::optional<std::vector<std::int64_t>> g;  // principal seeds only
  std::optional<std::string> f;
};

struct LaurentReport {
  std::vector<LaurentNode> nodes;
  std::vector<std::string> findings;  // non-Laurent or negative variables, with their path
  bool all_laurent = true;
  bool all_nonnegative = true;
};

// Exhaustive: every path of length <= depth that never repeats the previous
// direction. Otherwise `paths` random paths of length `depth` drawn with `rng_seed`.
LaurentReport explore_laurent(const Seed& s, int depth, bool exhaustive, int paths = 0,
                              std::uint64_t rng_seed = 1);

}  // namespace hq
