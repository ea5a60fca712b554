#pragma once

#include <vector>

#include "nilflow/poly.hpp"
#include "nilflow/rat.hpp"

namespace nilflow {

class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rat& at(int r, int c) const { return a_[r * cols_ + c]; }

  RatMatrix transposed() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

/// Exact rank by fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
int rank_exact(const RatMatrix& m);

/// Exact determinant (square matrices).
Rat det_exact(const RatMatrix& m);

/// Reduced row echelon form; pivot column indices returned via `pivots`.
RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots = nullptr);

/// Basis of { x : m x = 0 }.
std::vector<std::vector<Rat>> nullspace(const RatMatrix& m);

/// Matrix of polynomial entries over a shared variable count.
class PolyMatrix {
 public:
  PolyMatrix() : rows_(0), cols_(0), nvars_(0) {}
  PolyMatrix(int rows, int cols, int nvars)
      : rows_(rows), cols_(cols), nvars_(nvars), a_(rows * cols, Poly(nvars)) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int nvars() const { return nvars_; }
  Poly& at(int r, int c) { return a_[r * cols_ + c]; }
  const Poly& at(int r, int c) const { return a_[r * cols_ + c]; }

  RatMatrix evaluate(const std::vector<Rat>& point) const;

 private:
  int rows_, cols_, nvars_;
  std::vector<Poly> a_;
};

/// Rank over the field of rational functions: the generic rank, exactly.
/// Bareiss elimination in the polynomial ring; divisions are exact.
/// When `pivot_rows`/`pivot_cols` are given they receive a witness minor
/// (its determinant is a not-identically-zero polynomial).
int symbolic_rank(const PolyMatrix& m, std::vector<int>* pivot_rows = nullptr,
                  std::vector<int>* pivot_cols = nullptr);

/// Symbolic determinant of a square polynomial matrix.
Poly det_symbolic(const PolyMatrix& m);

}  // namespace nilflow
