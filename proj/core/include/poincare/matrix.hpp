#pragma once

#include <cstddef>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

// Dense square matrix, row-major.
template <typename T>
class SquareMatrix {
public:
  explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * n_ + j];
  }

private:
  std::size_t n_;
  std::vector<T> data_;
};

// Fraction-free Bareiss elimination. The 0x0 determinant is 1.
Integer determinant(SquareMatrix<Integer> m);

// Clears denominators row by row, then runs Bareiss over the integers.
Rational determinant(const SquareMatrix<Rational>& m);

}  // namespace poincare
