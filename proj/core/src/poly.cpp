#include "hq/poly.hpp"

#include <algorithm>
#include <sstream>

#include "hq/errors.hpp"

namespace hq {

namespace {

constexpr double kTermOperationLimit = 4294967296.0;  // 2^32

void check_roster(const MultiPoly& a, const MultiPoly& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorCode::InvalidInput, "polynomials over different variable rosters");
}

Exponents zero_exponents(int n) { return Exponents(static_cast<std::size_t>(n), 0); }

// Coefficients of a as a polynomial in variable v.
std::map<int, MultiPoly> coefficients_in(const MultiPoly& a, int v) {
  std::map<int, MultiPoly> out;
  for (const auto& [e, c] : a.terms()) {
    Exponents rest = e;
    rest[v] = 0;
    auto it = out.try_emplace(e[v], a.nvars()).first;
    it->second.add_term(rest, c);
  }
  return out;
}

MultiPoly leading_coefficient_in(const MultiPoly& a, int v) {
  int d = a.degree(v);
  MultiPoly out(a.nvars());
  for (const auto& [e, c] : a.terms()) {
    if (e[v] != d) continue;
    Exponents rest = e;
    rest[v] = 0;
    out.add_term(rest, c);
  }
  return out;
}

MultiPoly positive_leading(MultiPoly a) {
  if (!a.is_zero() && a.leading_coefficient() < 0) return -a;
  return a;
}

MultiPoly content_in(const MultiPoly& a, int v) {
  MultiPoly g(a.nvars());
  for (const auto& [d, c] : coefficients_in(a, v)) {
    g = gcd(g, c);
    if (g.is_constant() && g.leading_coefficient() == 1) break;
  }
  return g;
}

// Pseudo-remainder of a by b in variable v.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, int v) {
  int d = b.degree(v);
  MultiPoly lb = leading_coefficient_in(b, v);
  MultiPoly r = a;
  while (!r.is_zero() && r.degree(v) >= d) {
    MultiPoly lr = leading_coefficient_in(r, v);
    Exponents e = zero_exponents(a.nvars());
    e[v] = r.degree(v) - d;
    r = lb * r - lr * shift(b, e);
  }
  return r;
}

int main_variable(const MultiPoly& a, const MultiPoly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree(v) > 0 || b.degree(v) > 0) return v;
  return -1;
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += v < names.size() ? names[v] : "v" + std::to_string(v + 1);
    if (e[v] != 1) out += "^" + std::to_string(e[v]);
  }
  return out;
}

}  // namespace

MultiPoly MultiPoly::constant(int nvars, const mpz_class& c) {
  MultiPoly p(nvars);
  p.add_term(zero_exponents(nvars), c);
  return p;
}

MultiPoly MultiPoly::monomial(const Exponents& e, const mpz_class& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int v) {
  Exponents e = zero_exponents(nvars);
  e[v] = 1;
  return monomial(e);
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

mpz_class MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

int MultiPoly::degree(int v) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[v];
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

int MultiPoly::min_degree(int v) const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first[v];
  for (const auto& [e, c] : terms_) d = std::min(d, e[v]);
  return d;
}

bool MultiPoly::nonnegative_exponents() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

bool MultiPoly::nonnegative_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (c < 0) return false;
  return true;
}

void MultiPoly::add_term(const Exponents& e, const mpz_class& c) {
  if (static_cast<int>(e.size()) != nvars_)
    fail(ErrorCode::InvalidInput, "exponent vector does not match the variable roster");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    mpz_class c = it->second;
    std::string m = monomial_string(it->first, names);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    mpz_class a = abs(c);
    if (m.empty()) {
      out << a.get_str();
    } else {
      if (a != 1) out << a.get_str() << "*";
      out << m;
    }
  }
  return out.str();
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  check_roster(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a) { return scale(a, -1); }

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  check_roster(a, b);
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms()) out.add_term(e, -c);
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  check_roster(a, b);
  if (static_cast<double>(a.size()) * static_cast<double>(b.size()) > kTermOperationLimit)
    fail(ErrorCode::ResourceLimit, "polynomial product exceeds the term-operation limit");
  MultiPoly out(a.nvars());
  Exponents e(static_cast<std::size_t>(a.nvars()));
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly scale(const MultiPoly& a, const mpz_class& c) {
  MultiPoly out(a.nvars());
  if (c == 0) return out;
  for (const auto& [e, x] : a.terms()) out.add_term(e, x * c);
  return out;
}

MultiPoly shift(const MultiPoly& a, const Exponents& s) {
  MultiPoly out(a.nvars());
  Exponents e(s.size());
  for (const auto& [ea, c] : a.terms()) {
    for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + s[v];
    out.add_term(e, c);
  }
  return out;
}

MultiPoly pow(const MultiPoly& a, int k) {
  if (k < 0) fail(ErrorCode::InvalidInput, "negative power of a polynomial");
  MultiPoly result = MultiPoly::constant(a.nvars(), 1);
  MultiPoly base = a;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly& quotient) {
  check_roster(a, b);
  if (b.is_zero()) fail(ErrorCode::NotDivisible, "division by the zero polynomial");
  if (!a.nonnegative_exponents() || !b.nonnegative_exponents())
    fail(ErrorCode::InvalidInput, "exact division needs polynomial (nonnegative) exponents");
  const int n = a.nvars();
  for (int v = 0; v < n; ++v)
    if (!a.is_zero() && a.degree(v) < b.degree(v)) return false;
  MultiPoly q(n);
  MultiPoly r = a;
  const Exponents& eb = b.leading_exponents();
  const mpz_class& cb = b.leading_coefficient();
  Exponents e(static_cast<std::size_t>(n));
  while (!r.is_zero()) {
    const Exponents& er = r.leading_exponents();
    for (int v = 0; v < n; ++v) {
      e[v] = er[v] - eb[v];
      if (e[v] < 0) return false;
    }
    if (!mpz_divisible_p(r.leading_coefficient().get_mpz_t(), cb.get_mpz_t())) return false;
    mpz_class c = r.leading_coefficient() / cb;
    q.add_term(e, c);
    Exponents t(static_cast<std::size_t>(n));
    for (const auto& [ebt, cbt] : b.terms()) {
      for (int v = 0; v < n; ++v) t[v] = ebt[v] + e[v];
      r.add_term(t, -c * cbt);
    }
  }
  quotient = std::move(q);
  return true;
}

MultiPoly divide_exact(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly q;
  if (!try_divide(a, b, q))
    fail(ErrorCode::NotDivisible, "polynomial is not divisible",
         R"({"dividend":")" + a.to_string() + R"(","divisor":")" + b.to_string() + R"("})");
  return q;
}

mpz_class integer_content(const MultiPoly& a) {
  mpz_class g = 0;
  for (const auto& [e, c] : a.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  check_roster(a, b);
  if (a.is_zero()) return positive_leading(b);
  if (b.is_zero()) return positive_leading(a);
  if (!a.nonnegative_exponents() || !b.nonnegative_exponents())
    fail(ErrorCode::InvalidInput, "gcd needs polynomial (nonnegative) exponents");
  const int n = a.nvars();
  int v = main_variable(a, b);
  if (v < 0) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.leading_coefficient().get_mpz_t(), b.leading_coefficient().get_mpz_t());
    return MultiPoly::constant(n, g);
  }
  if (a.degree(v) == 0) return gcd(a, content_in(b, v));
  if (b.degree(v) == 0) return gcd(content_in(a, v), b);

  MultiPoly ca = content_in(a, v), cb = content_in(b, v);
  MultiPoly c = gcd(ca, cb);
  MultiPoly p = divide_exact(a, ca), q = divide_exact(b, cb);
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  // Primitive remainder sequence: every remainder is reduced to its primitive part.
  while (true) {
    MultiPoly r = pseudo_remainder(p, q, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) {
      q = MultiPoly::constant(n, 1);
      break;
    }
    p = std::move(q);
    q = divide_exact(r, content_in(r, v));
  }
  return positive_leading(c * q);
}

MultiPoly monomial_substitute(const MultiPoly& a, const std::vector<Exponents>& images,
                              int target_nvars) {
  if (static_cast<int>(images.size()) != a.nvars())
    fail(ErrorCode::InvalidInput, "substitution does not cover the variable roster");
  MultiPoly out(target_nvars);
  Exponents e(static_cast<std::size_t>(target_nvars));
  for (const auto& [ea, c] : a.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (int v = 0; v < a.nvars(); ++v)
      if (ea[v] != 0)
        for (int w = 0; w < target_nvars; ++w) e[w] += ea[v] * images[v][w];
    out.add_term(e, c);
  }
  return out;
}

RationalFn::RationalFn(MultiPoly num, MultiPoly den) {
  check_roster(num, den);
  const int n = num.nvars();
  if (den.is_zero()) fail(ErrorCode::InvalidInput, "zero denominator");
  if (num.is_zero()) {
    num_ = MultiPoly(n);
    den_ = MultiPoly::constant(n, 1);
    return;
  }
  // Pull out the monomial parts so that num and den are polynomials with no
  // variable dividing them; the net monomial goes back on at the end.
  Exponents sn(static_cast<std::size_t>(n)), sd(static_cast<std::size_t>(n));
  Exponents net(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    int mn = num.min_degree(v), md = den.min_degree(v);
    sn[v] = -mn;
    sd[v] = -md;
    net[v] = mn - md;
  }
  num = shift(num, sn);
  den = shift(den, sd);

  mpz_class g;
  mpz_class cn = integer_content(num), cd = integer_content(den);
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g != 1) {
    MultiPoly gp = MultiPoly::constant(n, g);
    num = divide_exact(num, gp);
    den = divide_exact(den, gp);
  }
  if (!den.is_constant()) {
    MultiPoly q;
    if (try_divide(num, den, q)) {
      num = std::move(q);
      den = MultiPoly::constant(n, 1);
    } else {
      MultiPoly h = gcd(num, den);
      if (!h.is_constant()) {
        num = divide_exact(num, h);
        den = divide_exact(den, h);
      }
    }
  }
  Exponents up(static_cast<std::size_t>(n)), down(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    up[v] = std::max(net[v], 0);
    down[v] = std::max(-net[v], 0);
  }
  num = shift(num, up);
  den = shift(den, down);
  if (den.leading_coefficient() < 0) {
    num = -num;
    den = -den;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string RationalFn::to_string(const std::vector<std::string>& names) const {
  bool unit_den = den_.is_constant() && den_.leading_coefficient() == 1;
  if (unit_den) return num_.to_string(names);
  std::string n = num_.to_string(names), d = den_.to_string(names);
  if (num_.size() > 1) n = "(" + n + ")";
  if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
  return n + "/" + d;
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  if (a.den() == b.den()) return RationalFn(a.num() + b.num(), a.den());
  return RationalFn(a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num() * b.num(), a.den() * b.den());
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidInput, "division by zero");
  return RationalFn(a.num() * b.den(), a.den() * b.num());
}

RationalFn pow(const RationalFn& a, int k) {
  if (k >= 0) return RationalFn(pow(a.num(), k), pow(a.den(), k));
  if (a.is_zero()) fail(ErrorCode::InvalidInput, "negative power of zero");
  return RationalFn(pow(a.den(), -k), pow(a.num(), -k));
}

RationalFn monomial_substitute(const RationalFn& a, const std::vector<Exponents>& images,
                               int target_nvars) {
  return RationalFn(monomial_substitute(a.num(), images, target_nvars),
                    monomial_substitute(a.den(), images, target_nvars));
}

bool is_laurent(const RationalFn& r) { return r.den().is_monomial(); }

bool is_positive_laurent(const RationalFn& r) {
  return is_laurent(r) && r.num().nonnegative_coefficients();
}

}  // namespace hq
