#include "qtorb/ehrhart.hpp"

#include <algorithm>

#include "qtorb/sectors.hpp"

namespace qtorb {

LatticeSimplex make_simplex(const Model& model, const FacetSet& ambient_face,
                            std::vector<IntVec> verts, std::vector<int> tags) {
  LatticeSimplex sx;
  sx.ambient_face = ambient_face;
  sx.ambient_codim = static_cast<int>(ambient_face.size());
  IntMat basis = IntMat::from_columns(characteristic_set(model, ambient_face),
                                      static_cast<std::size_t>(model.n));
  for (const auto& v : verts) {
    RatVec c;
    if (!try_coords_in_basis(basis, v, c)) throw Error("simplex vertex outside the span of λ_F");
    Rat sum = 0;
    for (const auto& x : c) {
      if (x < 0) throw Error("simplex vertex outside Δ_F (negative coordinate)");
      sum += x;
    }
    if (sum != 1) throw Error("simplex vertex outside Δ_F (coordinates sum to " + to_string(sum) + ")");
    sx.coords.push_back(std::move(c));
  }
  if (!verts.empty() &&
      rank(IntMat::from_columns(verts, static_cast<std::size_t>(model.n))) != verts.size()) {
    throw Error("simplex vertices are linearly dependent");
  }
  sx.verts = std::move(verts);
  sx.tags = std::move(tags);
  return sx;
}

LatticeSimplex delta_of_face(const Face& face, const Model& model) {
  if (face.is_polytope()) throw Error("Δ_F is undefined for F = P");
  return make_simplex(model, face.facets, characteristic_set(model, face.facets), face.facets);
}

namespace {

// Left inverse restricted to d independent rows: c = adj * p[rows] / det.
struct RowSolver {
  std::vector<std::size_t> rows;
  IntMat adj;  // d x d, scaled so that det > 0
  Int det;
};

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

RowSolver make_solver(const std::vector<IntVec>& verts, std::size_t n) {
  const std::size_t d = verts.size();
  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  do {
    IntMat sub(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sub(i, j) = verts[j][idx[i]];
    Int dt = det(sub);
    if (dt == 0) continue;
    RowSolver s{idx, IntMat(d, d), abs(dt)};
    // adj(sub) via cofactors; d is tiny.
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        IntMat minor(d - 1, d - 1);
        for (std::size_t r = 0, mr = 0; r < d; ++r) {
          if (r == j) continue;
          for (std::size_t c = 0, mc = 0; c < d; ++c) {
            if (c == i) continue;
            minor(mr, mc++) = sub(r, c);
          }
          ++mr;
        }
        Int cof = det(minor);
        if ((i + j) % 2 == 1) cof = -cof;
        s.adj(i, j) = dt > 0 ? cof : Int(-cof);
      }
    return s;
  } while (next_combination(idx, n));
  throw Error("simplex vertices are linearly dependent");
}

}  // namespace

Int dilate_count(const LatticeSimplex& sx, int k) {
  if (k < 0) throw Error("negative dilation");
  const std::size_t d = sx.verts.size();
  if (d == 0) return k == 0 ? 1 : 0;
  const std::size_t n = sx.verts.front().size();
  RowSolver solver = make_solver(sx.verts, n);

  IntVec lo(n), hi(n);
  for (std::size_t r = 0; r < n; ++r) {
    lo[r] = hi[r] = sx.verts[0][r] * k;
    for (const auto& v : sx.verts) {
      Int x = v[r] * k;
      if (x < lo[r]) lo[r] = x;
      if (x > hi[r]) hi[r] = x;
    }
  }

  const Int target = solver.det * k;
  Int count = 0;
  IntVec p = lo;
  IntVec c(d);
  for (;;) {
    bool ok = true;
    Int sum = 0;
    for (std::size_t i = 0; i < d && ok; ++i) {
      c[i] = 0;
      for (std::size_t j = 0; j < d; ++j) c[i] += solver.adj(i, j) * p[solver.rows[j]];
      if (c[i] < 0) ok = false;
      sum += c[i];
    }
    if (ok && sum == target) {
      // p must equal Σ c_i v_i / det in every coordinate, not just the chosen rows.
      for (std::size_t r = 0; r < n && ok; ++r) {
        Int x = 0;
        for (std::size_t i = 0; i < d; ++i) x += c[i] * sx.verts[i][r];
        if (x != solver.det * p[r]) ok = false;
      }
      if (ok) ++count;
    }

    std::size_t r = 0;
    while (r < n) {
      ++p[r];
      if (p[r] <= hi[r]) break;
      p[r] = lo[r];
      ++r;
    }
    if (r == n) break;
  }
  return count;
}

Int dilate_count_fast(const LatticeSimplex& sx, int k) {
  if (k < 0) throw Error("negative dilation");
  const long d = static_cast<long>(sx.verts.size());
  if (d == 0) return k == 0 ? 1 : 0;
  const int ambient = static_cast<int>(sx.verts.front().size());
  Int total = 0;
  for (const auto& g : enumerate_cone_box(sx.verts, ambient)) {
    if (!is_integral(g.age)) {
      throw NonIntegralAge("dilate_count_fast requires integral ages; found " + to_string(g.age));
    }
    long level = static_cast<long>(g.age.get_num().get_si());
    total += binom(k - level + d - 1, d - 1);
  }
  return total;
}

std::vector<Int> numerator_from_dilates(const std::vector<Int>& dilates, int d) {
  if (static_cast<int>(dilates.size()) < d) throw Error("not enough dilates for the numerator");
  const Poly factor = pow(Poly{1, -1}, static_cast<unsigned>(d));
  std::vector<Int> psi(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j)
      psi[static_cast<std::size_t>(i)] +=
          factor.coeff(static_cast<std::size_t>(j)) * dilates[static_cast<std::size_t>(i - j)];
    if (psi[static_cast<std::size_t>(i)] < 0) {
      throw Error("negative Ehrhart numerator coefficient psi_" + std::to_string(i));
    }
  }
  return psi;
}

std::vector<Int> ehrhart_numerator(const LatticeSimplex& sx) {
  const int d = static_cast<int>(sx.verts.size());
  if (d == 0) return {};
  const int ambient = static_cast<int>(sx.verts.front().size());
  for (const auto& g : enumerate_cone_box(sx.verts, ambient)) {
    if (!is_integral(g.age)) {
      throw NonIntegralAge("Ehrhart numerator requires integral ages; found " + to_string(g.age));
    }
  }
  std::vector<Int> dilates;
  for (int k = 0; k < d; ++k) dilates.push_back(dilate_count(sx, k));
  return numerator_from_dilates(dilates, d);
}

}  // namespace qtorb
