#include "nefdual/linalg.hpp"

namespace nefdual {

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

Matrix nullspace(Matrix m, std::size_t cols) {
  auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(primitive(v));
  }
  return basis;
}

LinearSolution solve_linear(const std::vector<LinearConstraint>& system) {
  if (system.empty()) throw std::invalid_argument("solve_linear: empty system");
  const Point& first = system.front().point;
  const std::size_t d = first.dim();
  Matrix aug;
  aug.reserve(system.size());
  for (const auto& c : system) {
    require_compatible(first, c.point, "solve_linear");
    std::vector<Rational> row = c.point.coords;
    row.push_back(c.value);
    aug.push_back(std::move(row));
  }
  auto pivots = row_reduce(aug);
  LinearSolution out;
  if (!pivots.empty() && pivots.back() == d) {
    out.status = SolveStatus::Inconsistent;
    return out;
  }
  if (pivots.size() < d) {
    out.status = SolveStatus::Underdetermined;
    return out;
  }
  Point u(dual(first.space), std::vector<Rational>(d, Rational(0)));
  for (std::size_t r = 0; r < d; ++r) u.coords[pivots[r]] = aug[r][d];
  out.status = SolveStatus::Unique;
  out.solution = std::move(u);
  return out;
}

}  // namespace nefdual
