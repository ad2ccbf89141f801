#pragma once

#include "wittnum/rational.hpp"

#include <cstddef>
#include <vector>

namespace wittnum {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix zero_matrix(std::size_t rows, std::size_t cols);

bool is_square(const IntMatrix& m, std::size_t n);

// m[i][j] with every out-of-range index reading as 0.
Int at0(const IntMatrix& m, long i, long j);

}  // namespace wittnum
