#include "poincare/matrix.hpp"

#include <utility>

namespace poincare {

Integer determinant(SquareMatrix<Integer> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer previous = 1;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        m(i, j) = std::move(v);
      }
    }
    previous = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return negate ? Integer(-det) : det;
}

Rational determinant(const SquareMatrix<Rational>& m) {
  const std::size_t n = m.size();
  SquareMatrix<Integer> scaled(n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      scaled(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    }
    scale *= row_lcm;
  }
  Rational det(determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

}  // namespace poincare
