#pragma once

#include <span>
#include <vector>

#include "poincare/partition.hpp"
#include "poincare/rational.hpp"
#include "poincare/series.hpp"

namespace poincare {

// A ring homomorphism from symmetric functions to the rationals, fixed by
// the values of the elementary functions e_r (a series with e_0 = 1). The
// complete functions h_r are the dual series, so the pair always satisfies
// E(t) H(-t) = 1. Indices below zero read as 0.
class Specialization {
public:
  static Specialization from_elementary(TruncatedSeries e_values);
  static Specialization from_complete(TruncatedSeries s_values);
  // e-values expanded from Edrei data, e.g. roots x and poles y give the
  // super specialization x/y.
  static Specialization from_factored(const FactoredSeries& f, int order);

  const TruncatedSeries& e_values() const noexcept { return e_; }
  const TruncatedSeries& s_values() const noexcept { return s_; }
  int order() const noexcept { return e_.order(); }

private:
  Specialization(TruncatedSeries e, TruncatedSeries s)
      : e_(std::move(e)), s_(std::move(s)) {}

  TruncatedSeries e_;
  TruncatedSeries s_;
};

// Jacobi-Trudi in complete functions, det|h_{l_i - mu_j - i + j}| of size
// l(outer). Throws Error{InsufficientPrecision} past the truncation.
Rational jacobi_trudi_complete(const Specialization& sp,
                               const SkewShape& shape);
// Dual form, det|e_{l'_i - mu'_j - i + j}| of size l(outer').
Rational jacobi_trudi_elementary(const Specialization& sp,
                                 const SkewShape& shape);

// Schur value; uses whichever Jacobi-Trudi form has the smaller matrix.
Rational schur_value(const Specialization& sp, const Partition& lambda);
Rational skew_schur_value(const Specialization& sp, const SkewShape& shape);

// Berele-Regev hook Schur function: sum over mu in lambda of
// s_mu(x) s_{lambda'/mu'}(y).
Rational super_schur_value(std::span<const Rational> x,
                           std::span<const Rational> y,
                           const Partition& lambda);

// Number of semistandard tableaux of shape lambda and content `weight`
// (any composition). Throws Error{WeightMismatch} if the sizes differ.
Integer kostka(const Partition& lambda, std::span<const int> weight);

// Littlewood-Richardson coefficient c^lambda_{mu, gamma}, counted as
// semistandard fillings of lambda/mu with content gamma whose reverse
// reading word is a lattice word.
Integer lr_coefficient(const Partition& mu, const Partition& gamma,
                       const Partition& lambda);

// Exhaustive sum over semistandard tableaux with entries <= values.size()
// of prod values[entry-1]. Meant for small shapes only.
Rational schur_polynomial_oracle(const SkewShape& shape,
                                 std::span<const Rational> values);
Rational schur_polynomial_oracle(const Partition& lambda,
                                 std::span<const Rational> values);

// prod over cells (n + content) / hook, i.e. s_lambda(1^n).
Integer hook_content_dim(const Partition& lambda, int n);

}  // namespace poincare
