#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hq {

using Exponents = std::vector<int>;

// Sparse polynomial with integer coefficients over a fixed roster of
// variables. Exponents may be negative (Laurent monomials) except where an
// operation says otherwise. Terms are kept in lexicographic order of their
// exponent vectors; the last term is the leading one.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const mpz_class& c);
  static MultiPoly monomial(const Exponents& e, const mpz_class& c = 1);
  static MultiPoly variable(int nvars, int v);

  int nvars() const { return nvars_; }
  const std::map<Exponents, mpz_class>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }
  const Exponents& leading_exponents() const { return terms_.rbegin()->first; }
  const mpz_class& leading_coefficient() const { return terms_.rbegin()->second; }
  mpz_class coefficient(const Exponents& e) const;
  // Highest exponent of variable v over all terms (0 for the zero polynomial).
  int degree(int v) const;
  int min_degree(int v) const;
  bool nonnegative_exponents() const;
  bool nonnegative_coefficients() const;

  void add_term(const Exponents& e, const mpz_class& c);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  // Variable names default to v1, v2, ...
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Exponents, mpz_class> terms_;
};

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly scale(const MultiPoly& a, const mpz_class& c);
MultiPoly shift(const MultiPoly& a, const Exponents& e);  // multiply by x^e
MultiPoly pow(const MultiPoly& a, int k);                 // k >= 0

// Exact quotient a / b; throws NotDivisible. Both must have nonnegative exponents.
MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b);
// Returns false instead of throwing.
bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient);

mpz_class integer_content(const MultiPoly& a);  // nonnegative
// Greatest common divisor in Z[x], leading coefficient positive (0 for 0, 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Image under the monomial map sending variable v to the monomial images[v]
// (exponent vectors over a roster of `target_nvars` variables).
MultiPoly monomial_substitute(const MultiPoly& a, const std::vector<Exponents>& images,
                              int target_nvars);

// Element of the fraction field, kept as num/den with polynomial (nonnegative
// exponent) parts, gcd 1 and a positive leading denominator coefficient, so
// equal functions have identical representations.
class RationalFn {
 public:
  RationalFn() = default;
  explicit RationalFn(int nvars) : num_(nvars), den_(MultiPoly::constant(nvars, 1)) {}
  RationalFn(MultiPoly num, MultiPoly den);  // normalizes; den may carry Laurent monomials
  explicit RationalFn(const MultiPoly& p) : RationalFn(p, MultiPoly::constant(p.nvars(), 1)) {}
  static RationalFn variable(int nvars, int v) { return RationalFn(MultiPoly::variable(nvars, v)); }

  int nvars() const { return num_.nvars(); }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  MultiPoly num_, den_;
};

RationalFn operator+(const RationalFn& a, const RationalFn& b);
RationalFn operator*(const RationalFn& a, const RationalFn& b);
RationalFn operator/(const RationalFn& a, const RationalFn& b);
RationalFn pow(const RationalFn& a, int k);  // any sign
RationalFn monomial_substitute(const RationalFn& a, const std::vector<Exponents>& images,
                               int target_nvars);

// Denominator is a single term.
bool is_laurent(const RationalFn& r);
// Laurent with nonnegative numerator coefficients.
bool is_positive_laurent(const RationalFn& r);

}  // namespace hq
