#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hq/free_group.hpp"

namespace hq {

// One factor u · r^e · u^{-1} of a normal-closure decomposition.
struct Factor {
  Word conjugator;
  int relator = 0;
  int exponent = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

// Ordered product of factors (left to right).
using Decomposition = std::vector<Factor>;

Word evaluate(const Decomposition& d, const std::vector<Word>& relators);
Decomposition decomposition_inverse(const Decomposition& d);
Decomposition decomposition_conjugate(const Decomposition& d, const Word& g);  // g d g^{-1}
void append(Decomposition& into, const Decomposition& d);

// Result of trying to decide w ∈ <<relators>> in a free group.
struct WordVerdict {
  enum class Kind { In, NotIn, Unknown } kind = Kind::Unknown;
  Decomposition witness;            // In
  std::vector<Word> free_image;     // NotIn via homomorphism to a free group
  std::int64_t expansions = 0;
};

// Tietze elimination on <gens | relators> followed by bounded search. The
// elimination records, for every relator it produces, an explicit
// decomposition over the original relators so In-verdicts carry a witness.
class NormalClosureSolver {
 public:
  NormalClosureSolver(int num_generators, std::vector<Word> relators);

  int num_generators() const { return n_; }
  const std::vector<Word>& relators() const { return original_; }

  // True when every relator was consumed by elimination: the quotient is free
  // on the surviving generators and membership is decided exactly.
  bool exact() const { return remaining_.empty(); }
  const std::vector<int>& surviving_generators() const { return surviving_; }
  // Images of all generators in the free group on the survivors.
  const std::vector<Word>& substitution() const { return images_; }
  std::size_t remaining_relator_count() const { return remaining_.size(); }
  // Relators left after elimination, in the original generators.
  std::vector<Word> remaining_relators() const;

  WordVerdict decide(const Word& w, std::int64_t search_bound) const;

  // Decomposition of z with sigma(z) = 1 over the original relators.
  Decomposition lift_kernel(const Word& z) const;

 private:
  struct Level {
    int gen = 0;
    Word image;         // sigma(gen) in terms of later generators
    Word rel_rotated;   // gen · s, with image = s^{-1}
    Decomposition rel;  // rel_rotated as product over originals
  };
  struct Current {
    Word word;
    Decomposition proof;  // word == evaluate(proof)
  };

  // Apply one level to z: z = evaluate(out) · sigma_level(z).
  Word apply_level(const Level& l, const Word& z, Decomposition* out) const;
  std::optional<Decomposition> search(const Word& z, std::int64_t bound,
                                      std::int64_t* expansions) const;

  int n_;
  std::vector<Word> original_;
  std::vector<Level> levels_;
  std::vector<Current> remaining_;
  std::vector<int> surviving_;
  std::vector<Word> images_;
};

}  // namespace hq
