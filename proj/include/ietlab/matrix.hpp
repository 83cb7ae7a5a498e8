#pragma once

#include <cstddef>
#include <vector>

#include "ietlab/numeric.hpp"

namespace ietlab {

/// Square matrix of arbitrary-precision integers, row-major, 1-based accessors
/// matching interval labels.
///
/// Rauzy transition matrices follow the convention lengths_before =
/// M * lengths_after, so M(r, c) counts the visits of induced interval c to
/// original interval r.
class TransitionMatrix {
 public:
  TransitionMatrix() = default;
  explicit TransitionMatrix(std::size_t n);

  static TransitionMatrix identity(std::size_t n);
  // I + e_row e_col^T, the factor of one Rauzy step (row = winner, col = loser).
  static TransitionMatrix elementary(std::size_t n, int row, int col);

  std::size_t size() const { return n_; }

  BigInt& operator()(int row, int col) { return data_[index(row, col)]; }
  const BigInt& operator()(int row, int col) const { return data_[index(row, col)]; }

  IntVector column(int col) const;
  IntVector column_sums() const;

  bool operator==(const TransitionMatrix& other) const = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * n_ + static_cast<std::size_t>(col - 1);
  }

  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

IntVector unit_vector(std::size_t n, int label);
IntVector ones_vector(std::size_t n);

}  // namespace ietlab
