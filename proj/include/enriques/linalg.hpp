#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "enriques/rational.hpp"

// Dense exact linear algebra over Q. Sizes here are at most 22, so plain
// Gaussian elimination is all that is needed.
namespace enriques::linalg {

using Matrix = std::vector<std::vector<Rational>>;
using IntMatrix = std::vector<std::vector<long>>;

Matrix to_rational(const IntMatrix& m);
Matrix identity(std::size_t n);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);

Rational determinant(Matrix m);
std::size_t rank(Matrix m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Solves a x = b for square a; nullopt when a is singular.
std::optional<std::vector<Rational>> solve(Matrix a, std::vector<Rational> b);

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric matrix, via congruence diagonalization.
Inertia inertia(Matrix m);

bool is_symmetric(const IntMatrix& m);

}  // namespace enriques::linalg
