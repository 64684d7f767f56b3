#include "forms/linalg.hpp"

#include <stdexcept>

namespace forms {

Vec normalized_primitive(Vec v) {
  Integer den_lcm(1), num_gcd(0);
  for (const auto& x : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num().get_mpz_t());
  }
  if (num_gcd == 0) return v;  // zero vector
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  int lead_sign = 0;
  for (auto& x : v) {
    x *= scale;
    if (lead_sign == 0) lead_sign = sgn(x);
  }
  if (lead_sign < 0)
    for (auto& x : v) x = -x;
  return v;
}

namespace {

struct Echelon {
  std::vector<std::vector<Integer>> rows;  // forward-eliminated, pivot order
  std::vector<int> pivot_cols;
};

// Bareiss fraction-free forward elimination on row-primitive integer copies.
Echelon echelon_of(const Mat& input, int ncols) {
  Echelon e;
  for (const auto& row : input) {
    if (static_cast<int>(row.size()) != ncols)
      throw std::invalid_argument("ragged matrix row");
    Vec prim = normalized_primitive(row);
    std::vector<Integer> irow(ncols);
    bool all_zero = true;
    for (int j = 0; j < ncols; ++j) {
      irow[j] = prim[j].get_num();  // den 1 after normalization
      if (irow[j] != 0) all_zero = false;
    }
    if (!all_zero) e.rows.push_back(std::move(irow));
  }
  auto& m = e.rows;
  int nrows = static_cast<int>(m.size());
  int rank = 0;
  Integer prev(1);
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    int pivot = -1;
    for (int i = rank; i < nrows; ++i)
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < nrows; ++i) {
      for (int j = col + 1; j < ncols; ++j) {
        Integer t = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][col] = 0;
    }
    prev = m[rank][col];
    e.pivot_cols.push_back(col);
    ++rank;
  }
  m.resize(rank);
  return e;
}

}  // namespace

std::vector<Vec> kernel_basis(const Mat& rows, int ncols) {
  Echelon e = echelon_of(rows, ncols);
  int rank = static_cast<int>(e.pivot_cols.size());
  std::vector<bool> is_pivot(ncols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    Vec v(ncols, Rational(0));
    v[fc] = rat(1);
    for (int i = rank - 1; i >= 0; --i) {
      int pc = e.pivot_cols[i];
      Rational acc(0);
      for (int j = pc + 1; j < ncols; ++j)
        if (v[j] != 0) acc += Rational(e.rows[i][j]) * v[j];
      v[pc] = -acc / Rational(e.rows[i][pc]);
    }
    basis.push_back(normalized_primitive(std::move(v)));
  }
  return basis;
}

int matrix_rank(const Mat& rows, int ncols) {
  return static_cast<int>(echelon_of(rows, ncols).pivot_cols.size());
}

std::optional<Vec> row_space_representation(const Mat& rows, const Vec& target) {
  // Solve A^T y = target by rational Gaussian elimination (deterministic
  // first-nonzero pivoting), free coefficients zero.
  int nrows = static_cast<int>(rows.size());
  int ncols = static_cast<int>(target.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != ncols) throw std::invalid_argument("ragged matrix row");

  Mat aug(ncols, Vec(nrows + 1, Rational(0)));
  for (int i = 0; i < nrows; ++i)
    for (int j = 0; j < ncols; ++j) aug[j][i] = rows[i][j];
  for (int j = 0; j < ncols; ++j) aug[j][nrows] = target[j];

  std::vector<int> pivot_cols;
  int rank = 0;
  for (int col = 0; col < nrows && rank < ncols; ++col) {
    int pivot = -1;
    for (int i = rank; i < ncols; ++i)
      if (aug[i][col] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(aug[rank], aug[pivot]);
    Rational lead = aug[rank][col];
    for (auto& x : aug[rank]) x /= lead;
    for (int i = 0; i < ncols; ++i) {
      if (i == rank || aug[i][col] == 0) continue;
      Rational f = aug[i][col];
      for (int j = col; j <= nrows; ++j) aug[i][j] -= f * aug[rank][j];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  for (int i = rank; i < ncols; ++i)
    if (aug[i][nrows] != 0) return std::nullopt;  // inconsistent: not in row space

  Vec y(nrows, Rational(0));
  for (int i = 0; i < rank; ++i) y[pivot_cols[i]] = aug[i][nrows];
  return y;
}

}  // namespace forms
