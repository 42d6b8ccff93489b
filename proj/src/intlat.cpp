#include "qtorb/intlat.hpp"

#include <algorithm>
#include <utility>

namespace qtorb {

IntMat IntMat::identity(std::size_t n) {
  IntMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMat IntMat::from_columns(std::span<const IntVec> cols, std::size_t rows) {
  IntMat m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw Error("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMat::column(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

IntMat IntMat::transpose() const {
  IntMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

void IntMat::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMat::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMat::add_row(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntMat::add_col(std::size_t dst, std::size_t src, const Int& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntMat::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

void IntMat::negate_col(std::size_t c) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = -(*this)(i, c);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
  IntMat out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

IntVec operator*(const IntMat& a, const IntVec& x) {
  if (a.cols_ != x.size()) throw Error("matrix-vector dimension mismatch");
  IntVec out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
  return out;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

bool is_primitive(const IntVec& v) {
  Int g = gcd_of(v);
  if (g == 0) throw Error("primitivity of the zero vector is undefined");
  return g == 1;
}

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMat& m) {
  IntMat a = m;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, c) == 0) continue;
      Int f = a(i, c);
      Int piv = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * piv - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMat& m) {
  SmithForm s{IntMat::identity(m.rows()), m, IntMat::identity(m.cols()),
              IntMat::identity(m.rows())};
  IntMat& d = s.d;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();

  // Row operations are mirrored on u (left) and inversely on u_inv (right).
  auto row_swap = [&](std::size_t a, std::size_t b) {
    d.swap_rows(a, b);
    s.u.swap_rows(a, b);
    s.u_inv.swap_cols(a, b);
  };
  auto row_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    d.add_row(dst, src, f);
    s.u.add_row(dst, src, f);
    s.u_inv.add_col(src, dst, -f);
  };
  auto row_negate = [&](std::size_t r) {
    d.negate_row(r);
    s.u.negate_row(r);
    s.u_inv.negate_col(r);
  };
  auto col_swap = [&](std::size_t a, std::size_t b) {
    d.swap_cols(a, b);
    s.v.swap_cols(a, b);
  };
  auto col_add = [&](std::size_t dst, std::size_t src, const Int& f) {
    d.add_col(dst, src, f);
    s.v.add_col(dst, src, f);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero |entry| of the trailing block, first in row-major order.
      bool found = false;
      std::size_t pi = t;
      std::size_t pj = t;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Int a = abs(d(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) return s;
      row_swap(t, pi);
      col_swap(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(i, t).get_mpz_t(), d(t, t).get_mpz_t());
        row_add(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), d(t, j).get_mpz_t(), d(t, t).get_mpz_t());
        col_add(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            row_add(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) break;
    }
    if (d(t, t) < 0) row_negate(t);
  }
  return s;
}

IntMat saturation(const IntMat& l) {
  const std::size_t n = l.rows();
  const std::size_t k = l.cols();
  SmithForm s = smith_normal_form(l);
  if (k > n || (k > 0 && s.d(k - 1, k - 1) == 0)) {
    throw Error("saturation of linearly dependent columns");
  }
  // L = u_inv * D * v^-1, so the first k columns of u_inv span the saturation.
  IntMat b(n, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) b(i, j) = s.u_inv(i, j);
  return b;
}

bool try_coords_in_basis(const IntMat& basis, const IntVec& w, RatVec& out) {
  const std::size_t n = basis.rows();
  const std::size_t k = basis.cols();
  if (w.size() != n) throw Error("vector length does not match basis");
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = basis(i, j);
    a[i][k] = w[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c, ++r) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error("basis columns are linearly dependent");
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[r][j];
    }
  }
  for (std::size_t i = k; i < n; ++i)
    if (a[i][k] != 0) return false;
  out.assign(k, Rat(0));
  for (std::size_t j = 0; j < k; ++j) out[j] = a[j][k] / a[j][j];
  return true;
}

RatVec coords_in_basis(const IntMat& basis, const IntVec& w) {
  RatVec out;
  if (!try_coords_in_basis(basis, w, out)) throw Error("vector lies outside the span of the basis");
  return out;
}

}  // namespace qtorb
