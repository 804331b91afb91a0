#include "hq/smith.hpp"

#include <utility>

#include "hq/errors.hpp"

namespace hq {

ZMatrix z_identity(std::size_t n) {
  ZMatrix m(n, ZVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

ZMatrix z_mul(const ZMatrix& a, const ZMatrix& b) {
  if (a.empty()) return {};
  std::size_t inner = b.size(), cols = b.empty() ? 0 : b[0].size();
  ZMatrix r(a.size(), ZVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

ZVector z_mul(const ZMatrix& a, const ZVector& x) {
  ZVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < x.size(); ++k) r[i] += a[i][k] * x[k];
  return r;
}

ZVector SmithForm::invariant_factors() const {
  ZVector f;
  for (std::size_t i = 0; i < rank; ++i) f.push_back(d[i][i]);
  return f;
}

namespace {

struct Reducer {
  ZMatrix& a;
  ZMatrix& u;
  ZMatrix& v;
  std::size_t m, n;

  void swap_rows(std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (auto& row : a) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  // row_i -= q * row_j
  void row_sub(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t c = 0; c < n; ++c) a[i][c] -= q * a[j][c];
    for (std::size_t c = 0; c < m; ++c) u[i][c] -= q * u[j][c];
  }
  // col_i -= q * col_j
  void col_sub(std::size_t i, std::size_t j, const mpz_class& q) {
    for (std::size_t r = 0; r < m; ++r) a[r][i] -= q * a[r][j];
    for (std::size_t r = 0; r < n; ++r) v[r][i] -= q * v[r][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }

  // Bring the smallest nonzero entry of the trailing block to (t, t) and clear
  // its row and column. Returns false when the block is zero.
  bool pivot(std::size_t t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (sgn(a[i][j]) != 0 && (pi == m || mpz_cmpabs(a[i][j].get_mpz_t(), a[pi][pj].get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == m) return false;
      if (pi != t) swap_rows(pi, t);
      if (pj != t) swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        row_sub(i, t, q);
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        col_sub(j, t, q);
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold any entry not divisible by the pivot into row t.
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(a[i][j].get_mpz_t(), a[t][t].get_mpz_t())) {
            row_sub(t, i, -1);
            divisible = false;
            break;
          }
      if (!divisible) continue;
      if (sgn(a[t][t]) < 0) negate_row(t);
      return true;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const ZMatrix& mat) {
  SmithForm s;
  s.rows = mat.size();
  s.cols = mat.empty() ? 0 : mat[0].size();
  for (const auto& row : mat)
    if (row.size() != s.cols) fail(ErrorCode::InvalidInput, "ragged integer matrix");
  s.d = mat;
  s.u = z_identity(s.rows);
  s.v = z_identity(s.cols);
  Reducer r{s.d, s.u, s.v, s.rows, s.cols};
  std::size_t t = 0;
  while (t < s.rows && t < s.cols && r.pivot(t)) ++t;
  s.rank = t;
  return s;
}

LatticeVerdict lattice_membership(const SmithForm& s, const ZVector& target) {
  if (target.size() != s.rows) fail(ErrorCode::InvalidInput, "target length differs from row count");
  LatticeVerdict out;
  ZVector ut = z_mul(s.u, target);
  ZVector y(s.cols, 0);
  for (std::size_t i = 0; i < s.rows; ++i) {
    if (i < s.rank) {
      const mpz_class& d = s.d[i][i];
      if (!mpz_divisible_p(ut[i].get_mpz_t(), d.get_mpz_t())) {
        out.character = s.u[i];
        for (auto& c : out.character) c %= d;
        out.modulus = d;
        return out;
      }
      y[i] = ut[i] / d;
    } else if (sgn(ut[i]) != 0) {
      out.character = s.u[i];
      out.modulus = 0;
      return out;
    }
  }
  out.member = true;
  out.coefficients = z_mul(s.v, y);
  return out;
}

}  // namespace hq
