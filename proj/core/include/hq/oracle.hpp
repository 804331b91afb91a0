#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hq/covering.hpp"
#include "hq/free_group.hpp"
#include "hq/smith.hpp"

namespace hq {

enum class Verdict { In, NotIn, Unknown };
const char* verdict_name(Verdict v);

enum class Certificate {
  None,                 // Unknown
  Full,                 // every closed walk is in H
  TrivialWord,          // In: reduces to the identity
  NonEmptyReducedWord,  // NotIn for the trivial homotopy
  Witness,              // In: product of conjugated generators
  ClosedLift,           // In: lift through the covering closes
  NonClosedLift,        // NotIn: lift through the covering does not close
  LatticeMember,        // In for the abelian backend: integer combination
  AbelianObstruction,   // NotIn: character separating w from the relators
  FreeImage,            // NotIn: homomorphism to a free group killing H but not w
};
const char* certificate_name(Certificate c);

// path goes from the base of the queried walk to the base of the generator;
// the factor is  path, generator^exponent, path^{-1}  in traversal order.
struct WalkFactor {
  Walk path;
  int generator = 0;
  int exponent = 1;
};

struct Membership {
  Verdict verdict = Verdict::Unknown;
  Certificate certificate = Certificate::None;
  std::vector<WalkFactor> witness;        // Witness
  VertexId lift_start = -1;               // lift certificates
  VertexId lift_end = -1;
  ZVector coefficients;                   // LatticeMember
  ZVector character;                      // AbelianObstruction (indexed by arrow position)
  mpz_class modulus;                      // 0 means the character is over Z
  std::vector<Word> arrow_images;         // FreeImage, parallel to quiver arrows
  std::int64_t expansions = 0;
};

inline constexpr std::int64_t kDefaultSearchBound = 100000;
// HQ_SEARCH_BOUND when set, else kDefaultSearchBound.
std::int64_t default_search_bound();

// Normal subgroupoid of the free groupoid of a quiver, with a sound
// three-valued membership test. Immutable; cheap to copy.
class HomotopyOracle {
 public:
  enum class Kind { Trivial, Full, Generated, FiniteCover, AbelianQuotient };

  static HomotopyOracle trivial(const Quiver& q);
  static HomotopyOracle full(const Quiver& q);
  static HomotopyOracle generated(const Quiver& q, std::vector<Walk> generators,
                                  std::int64_t search_bound = default_search_bound());
  static HomotopyOracle finite_cover(Covering c);
  static HomotopyOracle abelian(const Quiver& q, std::vector<Walk> generators);

  Kind kind() const;
  const Quiver& quiver() const;
  const std::vector<Walk>& generators() const;  // Generated / AbelianQuotient
  const Covering& covering() const;            // FiniteCover
  std::int64_t search_bound() const;
  // Generated: true when elimination decides every query in the component of v.
  bool decides_exactly(VertexId v) const;

  Membership membership(const Walk& w) const;
  Verdict verdict(const Walk& w) const { return membership(w).verdict; }

 private:
  struct State;
  std::shared_ptr<const State> s_;
};

const char* oracle_kind_name(HomotopyOracle::Kind k);

// Independent re-check of a certificate: replays witnesses, re-lifts walks,
// recomputes abelian images and free images. Returns false on any mismatch.
bool verify_membership(const HomotopyOracle& h, const Walk& w, const Membership& m);

// Arrow-count vector of a walk (indexed by arrow position).
ZVector abelian_image(const Quiver& q, const Walk& w);

enum class Tri { False, True, Unknown };
const char* tri_name(Tri t);

// True iff every chord generator squared and every commutator of chord
// generators (per component) lies in H; Unknown propagates.
Tri exponent_two_quotient_check(const HomotopyOracle& h, const Quiver& q);

}  // namespace hq
