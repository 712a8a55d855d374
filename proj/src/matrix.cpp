#include "ztile/matrix.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <utility>

#include "ztile/errors.hpp"

namespace ztile {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVec>& cols) {
  const int c = static_cast<int>(cols.size());
  const int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  RatMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    assert(static_cast<int>(cols[j].size()) == r);
    for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    assert(static_cast<int>(rows[i].size()) == c);
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVec RatMatrix::row(int i) const {
  RatVec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

RatVec RatMatrix::column(int j) const {
  RatVec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

RatMatrix RatMatrix::select_columns(const std::vector<int>& idx) const {
  RatMatrix m(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
  return m;
}

RatVec RatMatrix::apply(const RatVec& x) const {
  assert(static_cast<int>(x.size()) == cols_);
  RatVec out(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  assert(cols_ == rhs.rows());
  RatMatrix m(rows_, rhs.cols());
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols(); ++j) m(i, j) += a * rhs(k, j);
    }
  return m;
}

bool RatMatrix::operator==(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  return data_ == rhs.data_;
}

namespace {

// Clears denominators row by row; row scaling by positive integers, so
// rank, nullspace and minor signs are unchanged.
std::vector<Int> cleared_rows(const RatMatrix& m) {
  std::vector<Int> grid(static_cast<size_t>(m.rows()) * m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    Int l(1);
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m.cols(); ++j) {
      const Rat& q = m(i, j);
      grid[static_cast<size_t>(i) * m.cols() + j] = q.get_num() * (l / q.get_den());
    }
  }
  return grid;
}

// One-step Bareiss update of the trailing block; divisions are exact.
Int int_det_bareiss(std::vector<Int> a, int n) {
  if (n == 0) return Int(1);
  auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Int(0);
    if (piv != k) {
      for (int j = k; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign > 0 ? at(n - 1, n - 1) : Int(-at(n - 1, n - 1));
}

// Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const Rat inv_piv = Rat(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv_piv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rat f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

int rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  std::vector<Int> a = cleared_rows(m);
  const int rows = m.rows(), cols = m.cols();
  auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * cols + j]; };
  std::vector<bool> used(rows, false);
  Int prev(1);
  int rk = 0;
  for (int j = 0; j < cols && rk < rows; ++j) {
    int piv = -1;
    for (int i = 0; i < rows; ++i)
      if (!used[i] && at(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int i = 0; i < rows; ++i) {
      if (used[i] || i == piv || at(i, j) == 0) continue;
      for (int jj = j + 1; jj < cols; ++jj) at(i, jj) = (at(i, jj) * at(piv, j) - at(i, j) * at(piv, jj)) / prev;
      at(i, j) = 0;
    }
    used[piv] = true;
    prev = at(piv, j);
    ++rk;
  }
  return rk;
}

Rat determinant(const RatMatrix& m) {
  assert(m.is_square());
  const int n = m.rows();
  if (n == 0) return Rat(1);
  Int scale(1);
  std::vector<Int> grid(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    Int l(1);
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) grid[static_cast<size_t>(i) * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return rat_from(int_det_bareiss(std::move(grid), n), scale);
}

RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw SingularMatrix("inverse of a non-square matrix");
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const std::vector<int> pivots = rref(aug);
  if (static_cast<int>(pivots.size()) != n || pivots.back() >= n)
    throw SingularMatrix("matrix is singular");
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::vector<RatVec> nullspace(const RatMatrix& m) {
  const int n = m.cols();
  if (m.rows() == 0) {
    // No constraints: the whole space.
    std::vector<RatVec> basis;
    for (int j = 0; j < n; ++j) {
      RatVec e(n, Rat(0));
      e[j] = 1;
      basis.push_back(std::move(e));
    }
    return basis;
  }
  RatMatrix r = m;
  const std::vector<int> pivots = rref(r);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(n, Rat(0));
    v[f] = 1;
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix hnf(const RatMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<Int> a(static_cast<size_t>(rows) * cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (!is_integral(m(i, j))) throw NonIntegerInput("hnf requires integer entries");
      a[static_cast<size_t>(i) * cols + j] = m(i, j).get_num();
    }
  auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * cols + j]; };
  auto col_swap = [&](int x, int y) {
    for (int i = 0; i < rows; ++i) std::swap(at(i, x), at(i, y));
  };
  auto col_axpy = [&](int dst, int src, const Int& f) {  // col dst -= f * col src
    if (f == 0) return;
    for (int i = 0; i < rows; ++i) at(i, dst) -= f * at(i, src);
  };

  int c = 0;  // next pivot column slot
  for (int i = 0; i < rows && c < cols; ++i) {
    // Euclid over the row entries in columns >= c until one survives.
    while (true) {
      int best = -1;
      Int best_abs;
      for (int j = c; j < cols; ++j) {
        if (at(i, j) == 0) continue;
        Int a_abs = abs(at(i, j));
        if (best < 0 || a_abs < best_abs) {
          best = j;
          best_abs = a_abs;
        }
      }
      if (best < 0) break;  // row has no pivot; move to next row
      if (best != c) col_swap(c, best);
      bool reduced_all = true;
      for (int j = c + 1; j < cols; ++j) {
        if (at(i, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), at(i, j).get_mpz_t(), at(i, c).get_mpz_t());
        col_axpy(j, c, q);
        if (at(i, j) != 0) reduced_all = false;
      }
      if (reduced_all) break;
    }
    if (at(i, c) == 0) continue;
    if (at(i, c) < 0)
      for (int ii = 0; ii < rows; ++ii) at(ii, c) = -at(ii, c);
    // Canonical reduction of earlier columns at this pivot row.
    for (int j = 0; j < c; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), at(i, j).get_mpz_t(), at(i, c).get_mpz_t());
      col_axpy(j, c, q);
    }
    ++c;
  }

  RatMatrix out(rows, c);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < c; ++j) out(i, j) = Rat(at(i, j));
  return out;
}

RatMatrix hnf_rational(const RatMatrix& m) {
  Int l(1);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
  RatMatrix scaled(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) scaled(i, j) = m(i, j) * Rat(l);
  RatMatrix h = hnf(scaled);
  const Rat inv_l = rat_from(1, l);
  for (int i = 0; i < h.rows(); ++i)
    for (int j = 0; j < h.cols(); ++j) h(i, j) *= inv_l;
  return h;
}

bool is_positive_definite(const RatMatrix& m) {
  if (!m.is_square()) throw NotSymmetric("not a square matrix");
  const int n = m.rows();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i)) throw NotSymmetric("matrix is not symmetric");
  if (n == 0) return true;
  // Row clearing multiplies each leading minor by a positive factor, so
  // the Sylvester signs survive. Bareiss without pivoting makes entry
  // (k,k) at the start of step k the k-th leading principal minor.
  std::vector<Int> a = cleared_rows(m);
  auto at = [&](int i, int j) -> Int& { return a[static_cast<size_t>(i) * n + j]; };
  Int prev(1);
  for (int k = 0; k < n; ++k) {
    if (at(k, k) <= 0) return false;
    if (k + 1 == n) break;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return true;
}

bool in_hnf_lattice(const RatMatrix& hnf_basis, const RatVec& x) {
  RatVec rem = x;
  int row = 0;
  for (int j = 0; j < hnf_basis.cols(); ++j) {
    // Locate this column's pivot row (first nonzero from the top).
    while (row < hnf_basis.rows() && hnf_basis(row, j) == 0) {
      if (rem[row] != 0) return false;  // x has support above the staircase
      ++row;
    }
    if (row == hnf_basis.rows()) break;
    const Rat coeff = rem[row] / hnf_basis(row, j);
    if (!is_integral(coeff)) return false;
    for (int i = row; i < hnf_basis.rows(); ++i) rem[i] -= coeff * hnf_basis(i, j);
  }
  return is_zero(rem);
}

bool SpanTester::insert(const RatVec& v) {
  RatVec r = reduce(v);
  int piv = -1;
  for (int i = 0; i < n_; ++i)
    if (r[i] != 0) {
      piv = i;
      break;
    }
  if (piv < 0) return false;
  const Rat inv = Rat(1) / r[piv];
  for (int i = piv; i < n_; ++i) r[i] *= inv;
  rows_.push_back(std::move(r));
  pivots_.push_back(piv);
  return true;
}

bool SpanTester::contains(const RatVec& v) const { return is_zero(reduce(v)); }

RatVec SpanTester::reduce(RatVec v) const {
  for (size_t k = 0; k < rows_.size(); ++k) {
    const Rat& f = v[pivots_[k]];
    if (f == 0) continue;
    const Rat c = f;  // rows are pivot-normalized to 1
    for (int i = pivots_[k]; i < n_; ++i) v[i] -= c * rows_[k][i];
  }
  return v;
}

}  // namespace ztile
