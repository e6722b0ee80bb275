#include "double_description.hpp"

#include <boost/dynamic_bitset.hpp>

namespace nefdual::detail {

namespace {

using ZeroSet = boost::dynamic_bitset<>;

struct Ray {
  std::vector<Rational> z;
  ZeroSet zeros;  // processed rows on which the ray is tight
};

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Picks `cols` linearly independent rows, preferring earlier ones.
std::vector<std::size_t> independent_rows(const Matrix& rows, std::size_t cols) {
  std::vector<std::size_t> chosen;
  Matrix basis;
  for (std::size_t i = 0; i < rows.size() && chosen.size() < cols; ++i) {
    Matrix trial = basis;
    trial.push_back(rows[i]);
    if (rank(trial) > basis.size()) {
      basis = std::move(trial);
      chosen.push_back(i);
    }
  }
  return chosen;
}

}  // namespace

Matrix extreme_rays(const Matrix& rows, std::size_t cols) {
  const std::size_t m = rows.size();
  auto initial = independent_rows(rows, cols);
  if (initial.size() < cols) {
    throw std::logic_error("extreme_rays: constraint rows do not have full column rank");
  }

  // Rays of the simplicial cone {z : B z >= 0} are the columns of B^-1.
  Matrix aug;
  for (std::size_t r = 0; r < cols; ++r) {
    std::vector<Rational> row = rows[initial[r]];
    row.resize(2 * cols, Rational(0));
    row[cols + r] = 1;
    aug.push_back(std::move(row));
  }
  row_reduce(aug);

  std::vector<bool> processed(m, false);
  for (auto i : initial) processed[i] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < cols; ++j) {
    Ray ray;
    ray.z.resize(cols);
    for (std::size_t r = 0; r < cols; ++r) ray.z[r] = aug[r][cols + j];
    ray.z = primitive(ray.z);
    ray.zeros.resize(m);
    for (std::size_t r = 0; r < cols; ++r) {
      if (r != j) ray.zeros.set(initial[r]);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    const auto& a = rows[i];

    std::vector<Rational> value(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k) {
      value[k] = dot(a, rays[k].z);
      int s = sign(value[k]);
      if (s > 0) pos.push_back(k);
      if (s < 0) neg.push_back(k);
      if (s == 0) rays[k].zeros.set(i);
    }
    if (neg.empty()) continue;

    for (std::size_t k = 0; k < rays.size(); ++k) {
      if (sign(value[k]) >= 0) next.push_back(rays[k]);
    }
    for (auto p : pos) {
      for (auto n : neg) {
        ZeroSet common = rays[p].zeros & rays[n].zeros;
        if (common.count() + 2 < cols) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
          if (q != p && q != n && common.is_subset_of(rays[q].zeros)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray ray;
        ray.z.resize(cols);
        for (std::size_t c = 0; c < cols; ++c) {
          ray.z[c] = value[p] * rays[n].z[c] - value[n] * rays[p].z[c];
        }
        ray.z = primitive(ray.z);
        ray.zeros = common;
        ray.zeros.set(i);
        next.push_back(std::move(ray));
      }
    }
    rays = std::move(next);
  }

  Matrix out;
  out.reserve(rays.size());
  for (auto& r : rays) out.push_back(std::move(r.z));
  return out;
}

}  // namespace nefdual::detail
