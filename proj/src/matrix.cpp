#include "nilflow/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>

#include "nilflow/errors.hpp"

namespace nilflow {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

// Clears denominators row by row; row scaling preserves rank. Per-row
// factors are returned for determinant bookkeeping.
std::vector<std::vector<mpz_class>> to_integer_rows(const RatMatrix& m,
                                                    std::vector<mpz_class>* factors) {
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (int r = 0; r < m.rows(); ++r) {
    mpz_class lcm(1);
    for (int c = 0; c < m.cols(); ++c) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).den().get_mpz_t());
      lcm = l;
    }
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& q = m.at(r, c);
      z[r][c] = q.num() * (lcm / q.den());
    }
    if (factors) factors->push_back(lcm);
  }
  return z;
}

// Fraction-free elimination; returns rank, accumulates swap sign and, for
// square full-rank input, leaves det(scaled matrix) in `last_pivot`.
int bareiss_int(std::vector<std::vector<mpz_class>>& a, int* sign, mpz_class* last_pivot) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  mpz_class prev(1);
  int r = 0;
  if (sign) *sign = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (sgn(a[i][c]) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r) {
      std::swap(a[pr], a[r]);
      if (sign) *sign = -*sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  if (last_pivot) *last_pivot = prev;
  return r;
}

}  // namespace

int rank_exact(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto z = to_integer_rows(m, nullptr);
  return bareiss_int(z, nullptr, nullptr);
}

Rat det_exact(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error("det_exact: matrix not square");
  if (m.rows() == 0) return Rat(1);
  std::vector<mpz_class> factors;
  auto z = to_integer_rows(m, &factors);
  int sign = 1;
  mpz_class pivot;
  const int rank = bareiss_int(z, &sign, &pivot);
  if (rank < m.rows()) return Rat(0);
  Rat det{Rat(pivot) * Rat(sign)};
  for (const auto& f : factors) det /= Rat(mpz_class(f));
  return det;
}

RatMatrix rref(const RatMatrix& m, std::vector<int>* pivots) {
  RatMatrix a = m;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pr, j), a.at(r, j));
    const Rat inv = a.at(r, c).inv();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Rat f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return a;
}

std::vector<std::vector<Rat>> nullspace(const RatMatrix& m) {
  std::vector<int> pivots;
  const RatMatrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = Rat(1);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix PolyMatrix::evaluate(const std::vector<Rat>& point) const {
  RatMatrix m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).evaluate(point);
  return m;
}

namespace {

struct SymbolicElim {
  std::vector<std::vector<Poly>> a;
  std::vector<int> row_ids, col_ids;
  std::vector<int> pivot_rows, pivot_cols;
  int sign = 1;
  Poly prev;

  explicit SymbolicElim(const PolyMatrix& m)
      : a(m.rows(), std::vector<Poly>(m.cols(), Poly(m.nvars()))),
        prev(Poly::constant(m.nvars(), Rat(1))) {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c) a[r][c] = m.at(r, c);
    for (int r = 0; r < m.rows(); ++r) row_ids.push_back(r);
    for (int c = 0; c < m.cols(); ++c) col_ids.push_back(c);
  }

  // Full pivoting: the sparsest nonzero entry keeps intermediate minors small.
  int run() {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int r = 0;
    while (r < rows && r < cols) {
      int pr = -1, pc = -1;
      size_t best = 0;
      for (int i = r; i < rows; ++i)
        for (int j = r; j < cols; ++j) {
          if (a[i][j].is_zero()) continue;
          const size_t nt = a[i][j].term_count();
          if (pr < 0 || nt < best) {
            pr = i;
            pc = j;
            best = nt;
          }
        }
      if (pr < 0) break;
      if (pr != r) {
        std::swap(a[pr], a[r]);
        std::swap(row_ids[pr], row_ids[r]);
        sign = -sign;
      }
      if (pc != r) {
        for (int i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][r]);
        std::swap(col_ids[pc], col_ids[r]);
        sign = -sign;
      }
      for (int i = r + 1; i < rows; ++i) {
        for (int j = r + 1; j < cols; ++j)
          a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]).divided_exact(prev);
        a[i][r] = Poly(a[i][r].nvars());
      }
      prev = a[r][r];
      pivot_rows.push_back(row_ids[r]);
      pivot_cols.push_back(col_ids[r]);
      ++r;
    }
    return r;
  }
};

}  // namespace

int symbolic_rank(const PolyMatrix& m, std::vector<int>* pivot_rows,
                  std::vector<int>* pivot_cols) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  SymbolicElim elim(m);
  const int rank = elim.run();
  if (pivot_rows) *pivot_rows = elim.pivot_rows;
  if (pivot_cols) *pivot_cols = elim.pivot_cols;
  return rank;
}

Poly det_symbolic(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw Error("det_symbolic: matrix not square");
  if (m.rows() == 0) return Poly::constant(m.nvars(), Rat(1));
  SymbolicElim elim(m);
  const int rank = elim.run();
  if (rank < m.rows()) return Poly(m.nvars());
  return elim.prev.scaled(Rat(elim.sign));
}

}  // namespace nilflow
