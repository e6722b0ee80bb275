#pragma once

#include "nefdual/linalg.hpp"

namespace nefdual::detail {

// Extreme rays of the pointed cone {z : row . z >= 0 for every row}, each
// scaled to a primitive integral vector. The rows must have full column
// rank `cols`; an empty result means the cone is {0}.
Matrix extreme_rays(const Matrix& rows, std::size_t cols);

}  // namespace nefdual::detail
