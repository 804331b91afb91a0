#include "hq/cluster.hpp"

#include <algorithm>
#include <random>

#include "hq/errors.hpp"

namespace hq {

namespace {

void check_caps(int rank, int depth) {
  if (rank > kMaxClusterRank)
    fail(ErrorCode::ResourceLimit, "cluster rank above " + std::to_string(kMaxClusterRank));
  if (depth > kMaxClusterDepth)
    fail(ErrorCode::ResourceLimit, "cluster depth above " + std::to_string(kMaxClusterDepth));
}

// Laurent monomial in the semifield generators, placed after the x variables.
RationalFn coefficient_monomial(const Seed& s, const SemifieldElement& y) {
  Exponents e(static_cast<std::size_t>(s.roster_size()), 0);
  for (int j = 0; j < s.semifield.size(); ++j) e[s.rank() + j] = y[j];
  return RationalFn(MultiPoly::monomial(e), MultiPoly::constant(s.roster_size(), 1));
}

RationalFn one(int nvars) { return RationalFn(MultiPoly::constant(nvars, 1)); }

// x -> 1, everything else fixed.
RationalFn specialize_x(const Seed& s, const RationalFn& r) {
  const int n = s.rank(), m = s.semifield.size();
  std::vector<Exponents> images(static_cast<std::size_t>(n + m), Exponents(static_cast<std::size_t>(n + m), 0));
  for (int j = 0; j < m; ++j) images[n + j][n + j] = 1;
  return monomial_substitute(r, images, n + m);
}

// Subtraction-free polynomial in y evaluated in a tropical semifield with y_j -> c_j.
std::optional<SemifieldElement> tropical_value(const MultiPoly& a, int n,
                                               const std::vector<SemifieldElement>& c, int m) {
  if (a.is_zero() || !a.nonnegative_coefficients()) return std::nullopt;
  std::optional<SemifieldElement> out;
  for (const auto& [e, coef] : a.terms()) {
    SemifieldElement v(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < static_cast<int>(c.size()); ++j)
      for (int w = 0; w < m; ++w) v[w] += e[n + j] * c[j][w];
    out = out ? semifield_plus(*out, v) : v;
  }
  return out;
}

std::vector<std::int64_t> degree_of(const Seed& s, const Exponents& e) {
  const int n = s.rank();
  std::vector<std::int64_t> d(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) d[i] = e[i];
  for (int j = 0; j < n; ++j)
    if (e[n + j] != 0)
      for (int i = 0; i < n; ++i)
        d[i] += static_cast<std::int64_t>(e[n + j]) *
                (s.initial_adjacency[j][i] - s.initial_adjacency[i][j]);
  return d;
}

std::vector<std::int64_t> homogeneous_degree(const Seed& s, const MultiPoly& p, const RationalFn& x) {
  std::optional<std::vector<std::int64_t>> d;
  for (const auto& [e, c] : p.terms()) {
    auto de = degree_of(s, e);
    if (!d) {
      d = de;
    } else if (*d != de) {
      fail(ErrorCode::NotHomogeneous, "cluster variable is not homogeneous",
           R"({"value":")" + x.to_string(s.variable_names()) + R"("})");
    }
  }
  return *d;
}

std::string path_string(const std::vector<VertexId>& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i] + 1);
  return out + "]";
}

}  // namespace

SemifieldElement semifield_one(const Semifield& p) {
  return SemifieldElement(static_cast<std::size_t>(p.size()), 0);
}

SemifieldElement semifield_plus(const SemifieldElement& a, const SemifieldElement& b) {
  SemifieldElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::min(a[i], b[i]);
  return out;
}

SemifieldElement semifield_times(const SemifieldElement& a, const SemifieldElement& b) {
  SemifieldElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

SemifieldElement semifield_power(const SemifieldElement& a, std::int64_t k) {
  SemifieldElement out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<int>(a[i] * k);
  return out;
}

std::vector<std::string> Seed::variable_names() const {
  std::vector<std::string> names;
  for (int i = 0; i < rank(); ++i) names.push_back("x" + std::to_string(i + 1));
  for (const auto& g : semifield.generators) names.push_back(g);
  return names;
}

Seed initial_seed(const TrackedQuiver& tq, const Semifield& p, std::vector<SemifieldElement> coeffs) {
  const int n = tq.current.num_vertices();
  check_caps(n, 0);
  if (static_cast<int>(coeffs.size()) != n)
    fail(ErrorCode::InvalidInput, "need one coefficient per vertex");
  for (const auto& c : coeffs)
    if (static_cast<int>(c.size()) != p.size())
      fail(ErrorCode::InvalidInput, "coefficient does not match the semifield generators");
  Seed s;
  s.semifield = p;
  s.coeffs = std::move(coeffs);
  s.tq = tq;
  s.initial_adjacency = adjacency_matrix(tq.current);
  for (int i = 0; i < n; ++i) s.cluster.push_back(RationalFn::variable(n + p.size(), i));
  return s;
}

Seed trivial_seed(const TrackedQuiver& tq) {
  return initial_seed(tq, Semifield::trivial(),
                      std::vector<SemifieldElement>(static_cast<std::size_t>(tq.current.num_vertices())));
}

Seed principal_seed(const TrackedQuiver& tq) {
  const int n = tq.current.num_vertices();
  std::vector<std::string> gens;
  std::vector<SemifieldElement> coeffs;
  for (int j = 0; j < n; ++j) {
    gens.push_back("y" + std::to_string(j + 1));
    SemifieldElement e(static_cast<std::size_t>(n), 0);
    e[j] = 1;
    coeffs.push_back(e);
  }
  Seed s = initial_seed(tq, Semifield::tropical(gens), coeffs);
  s.principal = true;
  return s;
}

Seed seed_mutate(const Seed& s, VertexId k) {
  check_vertex(s.tq.current, k);
  check_caps(s.rank(), static_cast<int>(s.address.size()) + 1);
  const int n = s.rank(), N = s.roster_size();
  IntMatrix p = adjacency_matrix(s.tq.current);

  Seed out;
  out.tq = mutate(s.tq, k);  // DecisionUnknown propagates before any algebra
  out.semifield = s.semifield;
  out.principal = s.principal;
  out.initial_adjacency = s.initial_adjacency;
  out.address = s.address;
  out.address.push_back(k);

  RationalFn in = one(N), outgoing = one(N);
  for (int j = 0; j < n; ++j) {
    if (p[j][k] > 0) in = in * pow(s.cluster[j], static_cast<int>(p[j][k]));
    if (p[k][j] > 0) outgoing = outgoing * pow(s.cluster[j], static_cast<int>(p[k][j]));
  }
  const SemifieldElement& yk = s.coeffs[k];
  SemifieldElement yk_plus_one = semifield_plus(yk, semifield_one(s.semifield));
  RationalFn numerator = coefficient_monomial(s, yk) * in + outgoing;
  RationalFn denominator = coefficient_monomial(s, yk_plus_one) * s.cluster[k];
  out.cluster = s.cluster;
  out.cluster[k] = numerator / denominator;

  out.coeffs.resize(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    if (j == k) {
      out.coeffs[j] = semifield_power(yk, -1);
    } else {
      out.coeffs[j] = semifield_times(semifield_times(s.coeffs[j], semifield_power(yk, p[k][j])),
                                      semifield_power(yk_plus_one, p[j][k] - p[k][j]));
    }
  }
  return out;
}

Seed seed_mutate_sequence(const Seed& s, const std::vector<VertexId>& ks) {
  Seed cur = s;
  for (VertexId k : ks) cur = seed_mutate(cur, k);
  return cur;
}

std::vector<RationalFn> y_hat(const Seed& s) {
  const int n = s.rank();
  IntMatrix p = adjacency_matrix(s.tq.current);
  std::vector<RationalFn> out;
  for (int j = 0; j < n; ++j) {
    RationalFn y = coefficient_monomial(s, s.coeffs[j]);
    for (int i = 0; i < n; ++i) {
      auto e = p[i][j] - p[j][i];
      if (e != 0) y = y * pow(s.cluster[i], static_cast<int>(e));
    }
    out.push_back(y);
  }
  return out;
}

std::vector<RationalFn> y_mutate_field(const std::vector<RationalFn>& y, const IntMatrix& p, VertexId k) {
  const int n = static_cast<int>(y.size());
  RationalFn yk_plus_one = y[k] + one(y[k].nvars());
  std::vector<RationalFn> out(y.size());
  for (int j = 0; j < n; ++j) {
    if (j == k) {
      out[j] = pow(y[k], -1);
    } else {
      out[j] = y[j] * pow(y[k], static_cast<int>(p[k][j])) *
               pow(yk_plus_one, static_cast<int>(p[j][k] - p[k][j]));
    }
  }
  return out;
}

RationalFn f_polynomial(const Seed& principal, const std::vector<VertexId>& address, int i) {
  if (!principal.principal) fail(ErrorCode::InvalidInput, "F-polynomials need principal coefficients");
  Seed s = seed_mutate_sequence(principal, address);
  return specialize_x(s, s.cluster[i]);
}

bool separation_check(const Seed& s, const std::vector<VertexId>& address, int i) {
  if (!s.address.empty()) fail(ErrorCode::InvalidInput, "separation check starts from an initial seed");
  const int n = s.rank(), m = s.semifield.size();
  Seed here = seed_mutate_sequence(s, address);
  Seed pr = seed_mutate_sequence(principal_seed(s.tq), address);
  const RationalFn& X = pr.cluster[i];
  RationalFn F = specialize_x(pr, X);

  // X(x; y) with y_j the initial coefficients of s, as Laurent monomials.
  std::vector<Exponents> images(static_cast<std::size_t>(2 * n), Exponents(static_cast<std::size_t>(n + m), 0));
  for (int v = 0; v < n; ++v) images[v][v] = 1;
  for (int j = 0; j < n; ++j)
    for (int w = 0; w < m; ++w) images[n + j][n + w] = s.coeffs[j][w];
  RationalFn x_part = monomial_substitute(X, images, n + m);

  auto fn = tropical_value(F.num(), n, s.coeffs, m);
  auto fd = tropical_value(F.den(), n, s.coeffs, m);
  if (!fn || !fd) return false;  // F is not subtraction-free as computed
  SemifieldElement f_value = semifield_times(*fn, semifield_power(*fd, -1));
  return here.cluster[i] == x_part / coefficient_monomial(here, f_value);
}

std::vector<std::int64_t> g_vector_of(const Seed& principal, const RationalFn& x) {
  if (!principal.principal) fail(ErrorCode::InvalidInput, "g-vectors need principal coefficients");
  auto du = homogeneous_degree(principal, x.num(), x);
  auto dv = homogeneous_degree(principal, x.den(), x);
  for (std::size_t i = 0; i < du.size(); ++i) du[i] -= dv[i];
  return du;
}

std::vector<std::int64_t> g_vector(const Seed& principal, const std::vector<VertexId>& address, int i) {
  Seed s = seed_mutate_sequence(principal, address);
  return g_vector_of(s, s.cluster[i]);
}

LaurentReport explore_laurent(const Seed& s, int depth, bool exhaustive, int paths, std::uint64_t rng_seed) {
  check_caps(s.rank(), depth);
  LaurentReport report;
  const int n = s.rank();
  auto names = s.variable_names();

  auto record = [&](const Seed& child, VertexId k) {
    LaurentNode node;
    node.address = child.address;
    node.variable = k;
    const RationalFn& x = child.cluster[k];
    node.value = x.to_string(names);
    node.laurent = is_laurent(x);
    node.nonnegative = x.num().nonnegative_coefficients() && x.den().nonnegative_coefficients();
    if (!node.laurent) {
      report.all_laurent = false;
      report.findings.push_back("non-Laurent x" + std::to_string(k + 1) + " at path " +
                                path_string(child.address) + ": " + node.value);
    }
    if (!node.nonnegative) {
      report.all_nonnegative = false;
      report.findings.push_back("negative coefficient in x" + std::to_string(k + 1) + " at path " +
                                path_string(child.address) + ": " + node.value);
    }
    if (child.principal) {
      node.f = specialize_x(child, x).to_string(names);
      try {
        node.g = g_vector_of(child, x);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotHomogeneous) throw;
        report.findings.push_back("not homogeneous at path " + path_string(child.address));
      }
    }
    report.nodes.push_back(std::move(node));
  };

  if (exhaustive) {
    auto dfs = [&](auto&& self, const Seed& cur, int last, int left) -> void {
      if (left == 0) return;
      for (int k = 0; k < n; ++k) {
        if (k == last) continue;
        Seed child = seed_mutate(cur, k);
        record(child, k);
        self(self, child, k, left - 1);
      }
    };
    dfs(dfs, s, -1, depth);
  } else {
    std::mt19937_64 rng(rng_seed);
    for (int t = 0; t < paths; ++t) {
      Seed cur = s;
      int last = -1;
      for (int step = 0; step < depth; ++step) {
        int k;
        if (n == 1) {
          k = 0;
        } else {
          std::uniform_int_distribution<int> pick(0, last < 0 ? n - 1 : n - 2);
          k = pick(rng);
          if (last >= 0 && k >= last) ++k;
        }
        cur = seed_mutate(cur, k);
        record(cur, k);
        last = k;
      }
    }
  }
  return report;
}

}  // namespace hq
