#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "grl/scalar.hpp"

namespace grl {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row-major

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
std::string format(const Vector& v);

// Row echelon form from fraction-free (Bareiss) forward elimination; the
// pivot in each column is the first nonzero entry at or below the current row.
struct Echelon {
  Matrix rows;                      // nonzero rows only, in echelon order
  std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon row_echelon(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);

// Basis of {x : m x = 0}. One vector per non-pivot column, with a 1 in that
// column and 0 in the other free columns.
std::vector<Vector> kernel(const Matrix& m, std::size_t cols, const Field& field);

// Some x with m x = b, or nullopt when the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols, const Field& field);

// Coordinates of v in the span of `basis`, or nullopt if v is outside it.
std::optional<Vector> coordinates(const std::vector<Vector>& basis, const Vector& v, const Field& field);

std::optional<Matrix> inverse(const Matrix& m, const Field& field);
Vector apply(const Matrix& m, const Vector& v);
Matrix compose(const Matrix& a, const Matrix& b);
Matrix identity_matrix(const Field& field, std::size_t n);

}  // namespace grl
