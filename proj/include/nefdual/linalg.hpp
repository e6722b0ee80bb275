#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nefdual/point.hpp"

namespace nefdual {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns the pivot column of each
// nonzero row, in row order.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

// Basis of {x : m x = 0}, one vector per free column, each primitive integral.
Matrix nullspace(Matrix m, std::size_t cols);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct LinearSolution {
  SolveStatus status = SolveStatus::Inconsistent;
  // Set only when status == Unique; lives in the dual of the constraint space.
  std::optional<Point> solution;
};

struct LinearConstraint {
  Point point;
  Rational value;
};

// Solves <p, u> = value for every constraint. Inconsistency takes
// precedence over underdetermination. Throws std::invalid_argument on an
// empty system and DimensionMismatch on mixed constraint points.
LinearSolution solve_linear(const std::vector<LinearConstraint>& system);

}  // namespace nefdual
