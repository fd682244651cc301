#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "poincare/rational.hpp"

namespace poincare {

// Power series known modulo t^(order+1). The coefficient vector always has
// exactly order+1 entries; nothing past the order is ever claimed.
class TruncatedSeries {
public:
  // The constant series 1 truncated at `order`.
  static TruncatedSeries one(int order);
  static TruncatedSeries zero(int order);

  // Throws Error{InvalidArgument} on an empty coefficient list.
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  // Coefficient of t^k. Negative k reads as 0; k > order throws
  // Error{InsufficientPrecision}.
  const Rational& at(int k) const;
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }

  // Keeps coefficients 0..order; requires order <= this->order().
  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries&,
                         const TruncatedSeries&) = default;

private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product. Mismatched orders truncate to the smaller one.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// Coefficientwise product.
TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b);

// a(t) -> a(-t).
TruncatedSeries negate_variable(const TruncatedSeries& a);

// Multiplicative inverse; throws Error{ZeroConstantTerm} when c_0 = 0.
TruncatedSeries invert(const TruncatedSeries& a);

// q(t) = 1 / p(-t), so that p(t) q(-t) = 1. An involution.
TruncatedSeries dual_series(const TruncatedSeries& p);

// p'(t) / p(t), truncated at order N-1 for an input of order N. The
// coefficient of t^(r-1) is the r-th power sum when p is a complete series.
TruncatedSeries log_derivative(const TruncatedSeries& p);

// exp(integral_0^t p(u) du); an input of order M gives a result of order M+1.
TruncatedSeries exp_integral(const TruncatedSeries& p);

// Multiplication in the lambda-ring of series with constant term 1, carried
// through power sums: exp_integral(hadamard(log_derivative(a),
// log_derivative(b))). On linear factors (1-xt)^-1 * (1-yt)^-1 = (1-xyt)^-1.
TruncatedSeries lambda_product(const TruncatedSeries& a,
                               const TruncatedSeries& b);

// An infinite family of parameters scale * ratio^i, i >= 0, with
// 0 < ratio < 1. Used to annotate Edrei data that finite lists cannot carry.
struct GeometricFamily {
  Rational scale;
  Rational ratio;

  friend bool operator==(const GeometricFamily&,
                         const GeometricFamily&) = default;
};

// Edrei data: e^(gamma t) prod(1 + r_i t) / prod(1 - p_j t), optionally
// extended by infinite geometric families of roots and/or poles.
struct FactoredSeries {
  std::vector<Rational> roots;
  std::vector<Rational> poles;
  Rational gamma{0};
  std::optional<GeometricFamily> root_family;
  std::optional<GeometricFamily> pole_family;

  // Throws Error{InvalidArgument} if a root or pole is not strictly
  // positive, gamma is negative, or a family is out of range.
  void validate() const;
  bool is_finite() const noexcept { return !root_family && !pole_family; }

  friend bool operator==(const FactoredSeries&,
                         const FactoredSeries&) = default;
};

TruncatedSeries expand(const FactoredSeries& f, int order);

// Multiset union of roots and of poles, gammas added. Families do not
// compose in closed form, so at most one operand may carry each kind.
FactoredSeries factored_multiply(const FactoredSeries& a,
                                 const FactoredSeries& b);

}  // namespace poincare
