#include "wittnum/matrix.hpp"

namespace wittnum {

IntMatrix zero_matrix(std::size_t rows, std::size_t cols) {
  return IntMatrix(rows, std::vector<Int>(cols, Int(0)));
}

bool is_square(const IntMatrix& m, std::size_t n) {
  if (m.size() != n) {
    return false;
  }
  for (const auto& row : m) {
    if (row.size() != n) {
      return false;
    }
  }
  return true;
}

Int at0(const IntMatrix& m, long i, long j) {
  if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= m.size() ||
      static_cast<std::size_t>(j) >= m[static_cast<std::size_t>(i)].size()) {
    return 0;
  }
  return m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

}  // namespace wittnum
