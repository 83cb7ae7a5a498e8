#include "ietlab/matrix.hpp"

#include <stdexcept>

namespace ietlab {

TransitionMatrix::TransitionMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {}

TransitionMatrix TransitionMatrix::identity(std::size_t n) {
  TransitionMatrix m(n);
  for (std::size_t i = 1; i <= n; ++i) m(static_cast<int>(i), static_cast<int>(i)) = 1;
  return m;
}

TransitionMatrix TransitionMatrix::elementary(std::size_t n, int row, int col) {
  if (row == col) throw std::invalid_argument("elementary factor needs row != col");
  TransitionMatrix m = identity(n);
  m(row, col) += 1;
  return m;
}

IntVector TransitionMatrix::column(int col) const {
  IntVector out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r] = (*this)(static_cast<int>(r + 1), col);
  return out;
}

IntVector TransitionMatrix::column_sums() const {
  IntVector out(n_, BigInt(0));
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) out[c] += data_[r * n_ + c];
  return out;
}

IntVector unit_vector(std::size_t n, int label) {
  IntVector v(n, BigInt(0));
  v.at(static_cast<std::size_t>(label - 1)) = 1;
  return v;
}

IntVector ones_vector(std::size_t n) { return IntVector(n, BigInt(1)); }

}  // namespace ietlab
