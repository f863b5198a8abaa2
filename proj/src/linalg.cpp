#include "kaz/linalg.hpp"

#include <functional>
#include <numeric>

#include "kaz/error.hpp"

namespace kaz {

EchelonForm reduced_row_echelon(const Matrix& input, std::size_t num_cols) {
  Matrix m = input;
  EchelonForm out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < num_cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    Rational inv = 1 / m[row][col];
    m[row] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < m[r].dim(); ++c) m[r][c] -= f * m[row][c];
    }
    out.pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

std::size_t rank(const Matrix& rows, std::size_t num_cols) {
  return reduced_row_echelon(rows, num_cols).pivots.size();
}

Matrix nullspace(const Matrix& rows, std::size_t num_cols) {
  EchelonForm e = reduced_row_echelon(rows, num_cols);
  std::vector<bool> is_pivot(num_cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < num_cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(num_cols);
    v[free] = 1;
    for (std::size_t r = 0; r < e.rows.size(); ++r) v[e.pivots[r]] = -e.rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b) {
  std::size_t n = a.size();
  Matrix aug;
  aug.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(n + 1);
    for (std::size_t j = 0; j < n; ++j) row[j] = a[i][j];
    row[n] = b[i];
    aug.push_back(std::move(row));
  }
  EchelonForm e = reduced_row_echelon(aug, n);
  if (e.pivots.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[e.pivots[i]] = e.rows[i][n];
  return x;
}

Rational determinant(Matrix a) {
  std::size_t n = a.size();
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Integer determinant(std::vector<IntVector> a) {
  // Bareiss fraction-free elimination.
  std::size_t n = a.size();
  if (n == 0) return Integer(1);
  Integer prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return Integer(0);
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntVector primitive_integer(const RationalVector& v) {
  Integer lcm(1);
  for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Rational scaled = v[i] * lcm;
    out[i] = scaled.get_num();
  }
  return primitive_integer(std::move(out));
}

IntVector primitive_integer(IntVector v) {
  Integer g(0);
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

RationalVector to_rational(const IntVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

Integer gcd_of_maximal_minors(const std::vector<IntVector>& columns) {
  std::size_t k = columns.size();
  if (k == 0) return Integer(1);
  std::size_t n = columns.front().size();
  if (k > n) throw UserError("more columns than rows in minor computation");
  Integer g(0);
  std::vector<std::size_t> rows(k);
  std::iota(rows.begin(), rows.end(), 0);
  while (true) {
    std::vector<IntVector> minor(k, IntVector(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = columns[j][rows[i]];
    Integer d = determinant(std::move(minor));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) break;
    // next k-subset of {0..n-1}
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  return g;
}

}  // namespace kaz
