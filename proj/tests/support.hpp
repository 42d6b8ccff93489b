#pragma once

// Golden models and brute-force oracles shared by the test binaries. The
// oracles use plain int64 arithmetic and never call into the library
// algorithms they check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "qtorb/model.hpp"

namespace qtorb::testing {

inline Model make_model(std::string name, int n, std::vector<FacetSet> vertices,
                        std::vector<std::vector<long>> lambda) {
  Model m;
  m.name = std::move(name);
  m.n = n;
  m.m = static_cast<int>(lambda.size());
  m.vertices = std::move(vertices);
  for (const auto& v : lambda) {
    IntVec iv;
    for (long x : v) iv.emplace_back(x);
    m.lambda.push_back(iv);
  }
  return m;
}

inline Model wp112() {
  return make_model("WP112", 2, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0}, {0, 1}, {-1, -2}});
}

inline Model cp2() {
  return make_model("CP2", 2, {{0, 1}, {1, 2}, {0, 2}}, {{1, 0}, {0, 1}, {-1, -1}});
}

inline Model square() {
  return make_model("square", 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

inline Model z3_tetrahedron() {
  return make_model("Z3", 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}},
                    {{1, 0, 0}, {0, 1, 0}, {-1, -1, 3}, {0, 0, -1}});
}

using LVec = std::vector<std::int64_t>;
using LMat = std::vector<LVec>;  // list of columns

inline std::vector<LVec> to_long(const Model& m, const FacetSet& facets) {
  std::vector<LVec> out;
  for (int f : facets) {
    LVec v;
    for (const Int& x : m.lambda[static_cast<std::size_t>(f)]) v.push_back(x.get_si());
    out.push_back(v);
  }
  return out;
}

// Determinant by cofactor expansion along the first row; rows[i][j].
inline std::int64_t cofactor_det(const std::vector<LVec>& rows) {
  const std::size_t n = rows.size();
  if (n == 0) return 1;
  if (n == 1) return rows[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<LVec> minor;
    for (std::size_t r = 1; r < n; ++r) {
      LVec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(rows[r][k]);
      minor.push_back(row);
    }
    std::int64_t term = rows[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// gcd of all maximal minors of the n x k matrix with the given columns. For
// independent columns this is the order of the group (span_Q ∩ Z^n) / span_Z.
inline std::int64_t minor_gcd(const std::vector<LVec>& cols) {
  const std::size_t k = cols.size();
  if (k == 0) return 1;
  const std::size_t n = cols[0].size();
  std::int64_t g = 0;
  std::vector<std::size_t> rows(k);
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::size_t idx = 0;
    for (std::size_t r = 0; r < n; ++r)
      if (pick[r]) rows[idx++] = r;
    std::vector<LVec> sq(k, LVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sq[i][j] = cols[j][rows[i]];
    g = std::gcd(g, cofactor_det(sq));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g < 0 ? -g : g;
}

// One Box element as numerators over a common denominator.
struct BruteElement {
  std::vector<std::int64_t> num;
  std::int64_t den = 1;
  LVec point;
};

inline bool divisible_combination(const std::vector<LVec>& cols, const std::vector<std::int64_t>& t,
                                  std::int64_t den, LVec& point) {
  const std::size_t n = cols.empty() ? 0 : cols[0].size();
  point.assign(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) s += t[j] * cols[j][r];
    if (s % den != 0) return false;
    point[r] = s / den;
  }
  return true;
}

// Every t in [0, D)^k with Σ t_j λ_j ≡ 0 mod D.
inline std::vector<BruteElement> brute_box(const std::vector<LVec>& cols) {
  const std::int64_t d = minor_gcd(cols);
  const std::size_t k = cols.size();
  std::vector<BruteElement> out;
  std::vector<std::int64_t> t(k, 0);
  while (true) {
    LVec point;
    if (divisible_combination(cols, t, d, point)) out.push_back({t, d, point});
    std::size_t i = 0;
    while (i < k && ++t[i] == d) t[i++] = 0;
    if (i == k) break;
  }
  return out;
}

// Lattice points of level k in the cone over the columns: Σ a_j λ_j with
// a_j ≥ 0 and Σ a_j = k.
inline std::int64_t brute_dilates(const std::vector<LVec>& cols, int level) {
  const std::int64_t d = minor_gcd(cols);
  const std::size_t k = cols.size();
  const std::int64_t total = d * level;
  std::int64_t count = 0;
  std::vector<std::int64_t> t(k, 0);
  auto rec = [&](auto&& self, std::size_t j, std::int64_t left) -> void {
    if (j + 1 == k) {
      t[j] = left;
      LVec point;
      if (divisible_combination(cols, t, d, point)) ++count;
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      t[j] = x;
      self(self, j + 1, left - x);
    }
  };
  if (k == 0) return level == 0 ? 1 : 0;
  rec(rec, 0, total);
  return count;
}

// Σ_k dilates[k] t^k · (1 - t)^d truncated to degree d - 1.
inline std::vector<std::int64_t> series_times_one_minus_t(const std::vector<std::int64_t>& dilates, int d) {
  std::vector<std::int64_t> factor{1};
  for (int i = 0; i < d; ++i) {
    std::vector<std::int64_t> next(factor.size() + 1, 0);
    for (std::size_t j = 0; j < factor.size(); ++j) {
      next[j] += factor[j];
      next[j + 1] -= factor[j];
    }
    factor = next;
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= i; ++j)
      if (static_cast<std::size_t>(j) < factor.size() && static_cast<std::size_t>(i - j) < dilates.size())
        out[static_cast<std::size_t>(i)] += factor[static_cast<std::size_t>(j)] * dilates[static_cast<std::size_t>(i - j)];
  return out;
}

// h-vector of a simple polytope from vertex incidences alone: g_i counts
// facet subsets of size i contained in some vertex, h(t) = Σ g_i (t-1)^{n-i}.
inline std::vector<std::int64_t> brute_h_vector(const Model& m) {
  std::vector<std::set<FacetSet>> by_size(static_cast<std::size_t>(m.n) + 1);
  for (const FacetSet& v : m.vertices) {
    const std::size_t n = v.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      FacetSet s;
      for (std::size_t b = 0; b < n; ++b)
        if (mask & (1u << b)) s.push_back(v[b]);
      std::sort(s.begin(), s.end());
      by_size[s.size()].insert(s);
    }
  }
  const int n = m.n;
  std::vector<std::int64_t> poly(static_cast<std::size_t>(n) + 1, 0);  // coefficients of t^j
  for (int i = 0; i <= n; ++i) {
    const std::int64_t g = static_cast<std::int64_t>(by_size[static_cast<std::size_t>(i)].size());
    const int e = n - i;
    std::int64_t c = 1;  // binom(e, j)
    for (int j = 0; j <= e; ++j) {
      const std::int64_t sign = ((e - j) % 2 == 0) ? 1 : -1;
      poly[static_cast<std::size_t>(j)] += g * c * sign;
      c = c * (e - j) / (j + 1);
    }
  }
  std::vector<std::int64_t> h(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) h[static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(n - i)];
  return h;
}

}  // namespace qtorb::testing
