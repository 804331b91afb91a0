#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace hq {

using ZVector = std::vector<mpz_class>;
using ZMatrix = std::vector<ZVector>;  // row-major, all rows the same length

ZMatrix z_identity(std::size_t n);
ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b);
ZVector z_mul(const ZMatrix& a, const ZVector& x);

// U * M * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... | d_{rank-1},
// all d_i > 0.
struct SmithForm {
  ZMatrix u, v, d;
  std::size_t rank = 0;
  std::size_t rows = 0, cols = 0;

  ZVector invariant_factors() const;
};

SmithForm smith_normal_form(const ZMatrix& m);

// Solutions of M x = t. `coefficients` is set when t lies in the column
// lattice; otherwise `character` is a row vector y and modulus m (0 = over Z)
// with y M = 0 (mod m) and y t != 0 (mod m).
struct LatticeVerdict {
  bool member = false;
  ZVector coefficients;
  ZVector character;
  mpz_class modulus;
};

LatticeVerdict lattice_membership(const SmithForm& s, const ZVector& target);

}  // namespace hq
