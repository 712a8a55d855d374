#pragma once

#include <vector>

#include "ztile/rat.hpp"

namespace ztile {

// Dense exact rational matrix, row-major. Small by design (the documented
// working envelope is r <= 20 columns, n <= 8 rows), so no sparsity or
// pivoting heuristics — only exactness.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

  static RatMatrix identity(int n);
  static RatMatrix from_columns(const std::vector<RatVec>& cols);
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  RatVec row(int i) const;
  RatVec column(int j) const;
  RatMatrix transpose() const;
  RatMatrix select_columns(const std::vector<int>& idx) const;

  RatVec apply(const RatVec& x) const;  // M x
  RatMatrix operator*(const RatMatrix& rhs) const;
  bool operator==(const RatMatrix& rhs) const;
  bool is_square() const { return rows_ == cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rat> data_;
};

// Rank by fraction-free (Bareiss) elimination over denominator-cleared
// integers; exact for any input.
int rank(const RatMatrix& m);

// Exact determinant (square input), Bareiss with row pivoting.
Rat determinant(const RatMatrix& m);

// Exact inverse via rational Gauss-Jordan. Throws SingularMatrix.
RatMatrix inverse(const RatMatrix& m);

// Exact rational basis of {x : Mx = 0}; empty when the kernel is trivial.
std::vector<RatVec> nullspace(const RatMatrix& m);

// Column-style Hermite normal form of an integer matrix. Returns an
// n x rank basis of the column lattice with zero columns dropped.
// Convention (fixed once, relied on by every lattice-equality test):
// staircase pivots top to bottom, pivot entries positive, and in each
// pivot row the entries in earlier columns are reduced into [0, pivot).
// For full-rank square input this is lower-triangular with a positive
// diagonal. Throws NonIntegerInput.
RatMatrix hnf(const RatMatrix& m);

// HNF canonicalization of the lattice generated by rational columns:
// scale by the common denominator, reduce, scale back. Two rational
// lattices are equal iff their canonical bases are identical.
RatMatrix hnf_rational(const RatMatrix& m);

// Sylvester criterion, evaluated exactly: all leading principal minors
// positive. Input must be symmetric (NotSymmetric otherwise).
bool is_positive_definite(const RatMatrix& m);

// True iff x lies in the lattice generated by the columns of an HNF
// basis (integer coordinates; solved by forward substitution).
bool in_hnf_lattice(const RatMatrix& hnf_basis, const RatVec& x);

// Incremental row-space tester used by the matroid enumeration: keeps an
// echelonized set of rows and answers span membership exactly.
class SpanTester {
 public:
  explicit SpanTester(int n) : n_(n) {}
  // Returns true if v enlarged the span.
  bool insert(const RatVec& v);
  bool contains(const RatVec& v) const;
  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  RatVec reduce(RatVec v) const;
  int n_;
  std::vector<RatVec> rows_;
  std::vector<int> pivots_;
};

}  // namespace ztile
