#pragma once

// Shared helpers for the test suites: small builders and reference
// implementations that do not go through the library code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hq/quiver.hpp"

namespace hqt {

using hq::IntMatrix;
using hq::Quiver;

// Quiver from (src, tgt, label) triples.
inline Quiver make_quiver(int n, const std::vector<std::tuple<int, int, std::string>>& arrows) {
  Quiver q(n);
  for (const auto& [s, t, l] : arrows) q.add_arrow(s, t, l);
  return q;
}

// Quiver with counts[i][j] arrows i -> j, labelled by position.
inline Quiver quiver_from_counts(const IntMatrix& counts) {
  int n = static_cast<int>(counts.size());
  Quiver q(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int c = 0; c < counts[i][j]; ++c)
        q.add_arrow(i, j, "x" + std::to_string(i) + std::to_string(j) + "_" + std::to_string(c));
  return q;
}

inline IntMatrix count_arrows(const Quiver& q) {
  int n = q.num_vertices();
  IntMatrix p(n, std::vector<std::int64_t>(n, 0));
  for (const auto& a : q.arrows()) ++p[a.src][a.tgt];
  return p;
}

// Skew-symmetric b with b[i][j] = #(j -> i) - #(i -> j).
inline IntMatrix skew_from_counts(const IntMatrix& p) {
  int n = static_cast<int>(p.size());
  IntMatrix b(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = p[j][i] - p[i][j];
  return b;
}

// Matrix mutation rule, written out independently of the library.
inline IntMatrix reference_matrix_mutation(const IntMatrix& b, int k) {
  int n = static_cast<int>(b.size());
  IntMatrix out = b;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        std::int64_t bik = b[i][k], bkj = b[k][j];
        out[i][j] = b[i][j] + (std::abs(bik) * bkj + bik * std::abs(bkj)) / 2;
      }
    }
  return out;
}

// Calls f on every skew-symmetric n x n matrix with entries in [-m, m].
inline void for_each_skew_matrix(int n, int m, const std::function<void(const IntMatrix&)>& f) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  IntMatrix b(n, std::vector<std::int64_t>(n, 0));
  std::function<void(std::size_t)> rec = [&](std::size_t s) {
    if (s == slots.size()) {
      f(b);
      return;
    }
    auto [i, j] = slots[s];
    for (int v = -m; v <= m; ++v) {
      b[i][j] = v;
      b[j][i] = -v;
      rec(s + 1);
    }
  };
  rec(0);
}

inline IntMatrix random_counts(std::mt19937_64& rng, int n, int max_parallel, bool allow_two_cycles) {
  std::uniform_int_distribution<int> d(0, max_parallel);
  std::uniform_int_distribution<int> coin(0, 1);
  IntMatrix p(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (allow_two_cycles) {
        p[i][j] = d(rng);
        p[j][i] = d(rng);
      } else if (coin(rng)) {
        p[i][j] = d(rng);
      } else {
        p[j][i] = d(rng);
      }
    }
  return p;
}

}  // namespace hqt
