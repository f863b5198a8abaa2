#pragma once

#include <optional>
#include <vector>

#include "kaz/vector.hpp"

namespace kaz {

/// Row-major exact matrix.
using Matrix = std::vector<RationalVector>;
using IntVector = std::vector<Integer>;

struct EchelonForm {
  Matrix rows;                       // nonzero rows of the reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Pivots are searched among the first num_cols columns; any further columns
/// (an augmented right-hand side) are carried along.
EchelonForm reduced_row_echelon(const Matrix& rows, std::size_t num_cols);
std::size_t rank(const Matrix& rows, std::size_t num_cols);

/// Basis of {x : <r, x> = 0 for every row r}.
Matrix nullspace(const Matrix& rows, std::size_t num_cols);

/// Solves A x = b for square A; nullopt when A is singular.
std::optional<RationalVector> solve(const Matrix& a, const RationalVector& b);

Rational determinant(Matrix a);
Integer determinant(std::vector<IntVector> a);

/// Smallest positive integer multiple of v with coprime entries (zero stays zero).
IntVector primitive_integer(const RationalVector& v);
IntVector primitive_integer(IntVector v);
RationalVector to_rational(const IntVector& v);

/// gcd of all k x k minors of the n x k integer matrix whose columns are given.
Integer gcd_of_maximal_minors(const std::vector<IntVector>& columns);

}  // namespace kaz
