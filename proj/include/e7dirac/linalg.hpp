#pragma once

// Small dense exact linear algebra over the rationals.

#include "e7dirac/rational.hpp"

#include <optional>
#include <vector>

namespace e7dirac::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

Matrix identity(std::size_t n);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solves m x = b for square nonsingular m; nullopt when singular.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Basis of the right null space {x : m x = 0}.
std::vector<Vector> null_space(const Matrix& m);

std::size_t rank(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
Matrix transpose(const Matrix& a);

}  // namespace e7dirac::linalg
