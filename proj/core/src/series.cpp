#include "poincare/series.hpp"

#include <algorithm>
#include <string>

#include "poincare/error.hpp"

namespace poincare {

namespace {

void require_nonzero_constant(const TruncatedSeries& a) {
  if (a[0] == 0) {
    throw Error(ErrorKind::ZeroConstantTerm, "constant term is zero");
  }
}

void require_unit_constant(const TruncatedSeries& a) {
  require_nonzero_constant(a);
  if (a[0] != 1) {
    throw Error(ErrorKind::NonUnitConstantTerm, "constant term must be 1");
  }
}

// Series of prod(1 + c t)^{+1} or prod(1 - c t)^{-1} over one parameter,
// multiplied into `acc` in place.
void multiply_linear(std::vector<Rational>& acc, const Rational& c) {
  for (std::size_t k = acc.size() - 1; k >= 1; --k) acc[k] += c * acc[k - 1];
}

void divide_linear(std::vector<Rational>& acc, const Rational& c) {
  for (std::size_t k = 1; k < acc.size(); ++k) acc[k] += c * acc[k - 1];
}

// prod_{i>=0} (1 + a r^i t): coefficient k is a^k r^{k(k-1)/2} / prod_{j<=k}
// (1 - r^j). The pole family drops the r^{k(k-1)/2} factor.
std::vector<Rational> family_series(const GeometricFamily& fam, int order,
                                    bool roots) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  Rational ratio_pow = 1;  // r^k
  for (int k = 1; k <= order; ++k) {
    Rational step = fam.scale / (1 - ratio_pow * fam.ratio);
    if (roots) step *= ratio_pow;
    ratio_pow *= fam.ratio;
    c[k] = c[k - 1] * step;
  }
  return c;
}

void validate_family(const std::optional<GeometricFamily>& fam,
                     const char* what) {
  if (!fam) return;
  if (fam->scale <= 0 || fam->ratio <= 0 || fam->ratio >= 1) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(what) + " family needs scale > 0 and 0 < ratio < 1");
  }
}

}  // namespace

TruncatedSeries TruncatedSeries::one(int order) {
  auto s = zero(order);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  return TruncatedSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a series needs at least c_0");
  }
}

const Rational& TruncatedSeries::at(int k) const {
  static const Rational kZero(0);
  if (k < 0) return kZero;
  if (k > order()) {
    throw Error(ErrorKind::InsufficientPrecision,
                "coefficient " + std::to_string(k) + " requested from a series of order " +
                    std::to_string(order()));
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0 || order > this->order()) {
    throw Error(ErrorKind::InsufficientPrecision,
                "cannot truncate a series of order " + std::to_string(this->order()) +
                    " to order " + std::to_string(order));
  }
  return TruncatedSeries(
      std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] + b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= n; ++j) c[i + j] += a[i] * b[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries hadamard(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[k] = a[k] * b[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries negate_variable(const TruncatedSeries& a) {
  std::vector<Rational> c(a.coeffs().begin(), a.coeffs().end());
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries invert(const TruncatedSeries& a) {
  require_nonzero_constant(a);
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int i = 1; i <= k; ++i) acc += a[i] * b[k - i];
    b[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(b));
}

TruncatedSeries dual_series(const TruncatedSeries& p) {
  return invert(negate_variable(p));
}

TruncatedSeries log_derivative(const TruncatedSeries& p) {
  require_nonzero_constant(p);
  if (p.order() < 1) {
    throw Error(ErrorKind::InsufficientPrecision,
                "log-derivative needs a series of order >= 1");
  }
  // p' = q p, so n c_n = sum_{k<n} q_k c_{n-1-k}.
  const int n = p.order() - 1;
  std::vector<Rational> q(static_cast<std::size_t>(n) + 1);
  const Rational inv0 = 1 / p[0];
  for (int k = 0; k <= n; ++k) {
    Rational acc = Rational(k + 1) * p[k + 1];
    for (int i = 0; i < k; ++i) acc -= q[i] * p[k - i];
    q[k] = acc * inv0;
  }
  return TruncatedSeries(std::move(q));
}

TruncatedSeries exp_integral(const TruncatedSeries& p) {
  // f' = p f, f(0) = 1.
  const int n = p.order() + 1;
  std::vector<Rational> f(static_cast<std::size_t>(n) + 1);
  f[0] = 1;
  for (int k = 0; k < n; ++k) {
    Rational acc = 0;
    for (int i = 0; i <= k; ++i) acc += p[i] * f[k - i];
    f[k + 1] = acc / (k + 1);
  }
  return TruncatedSeries(std::move(f));
}

TruncatedSeries lambda_product(const TruncatedSeries& a,
                               const TruncatedSeries& b) {
  require_unit_constant(a);
  require_unit_constant(b);
  if (std::min(a.order(), b.order()) == 0) return TruncatedSeries::one(0);
  return exp_integral(hadamard(log_derivative(a), log_derivative(b)));
}

void FactoredSeries::validate() const {
  for (const auto& r : roots) {
    if (r <= 0) throw Error(ErrorKind::InvalidArgument, "roots must be positive");
  }
  for (const auto& u : poles) {
    if (u <= 0) throw Error(ErrorKind::InvalidArgument, "poles must be positive");
  }
  if (gamma < 0) throw Error(ErrorKind::InvalidArgument, "gamma must be >= 0");
  validate_family(root_family, "root");
  validate_family(pole_family, "pole");
}

TruncatedSeries expand(const FactoredSeries& f, int order) {
  f.validate();
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  std::vector<Rational> acc(static_cast<std::size_t>(order) + 1);
  acc[0] = 1;
  if (order > 0) {
    for (const auto& r : f.roots) multiply_linear(acc, r);
    for (const auto& u : f.poles) divide_linear(acc, u);
  }
  TruncatedSeries result(std::move(acc));
  if (f.gamma != 0) {
    std::vector<Rational> e(static_cast<std::size_t>(order) + 1);
    e[0] = 1;
    for (int k = 1; k <= order; ++k) e[k] = e[k - 1] * f.gamma / k;
    result = multiply(result, TruncatedSeries(std::move(e)));
  }
  if (f.root_family) {
    result = multiply(result,
                      TruncatedSeries(family_series(*f.root_family, order, true)));
  }
  if (f.pole_family) {
    result = multiply(result,
                      TruncatedSeries(family_series(*f.pole_family, order, false)));
  }
  return result;
}

FactoredSeries factored_multiply(const FactoredSeries& a,
                                 const FactoredSeries& b) {
  if ((a.root_family && b.root_family) || (a.pole_family && b.pole_family)) {
    throw Error(ErrorKind::InvalidArgument,
                "cannot combine two infinite families of the same kind");
  }
  FactoredSeries out = a;
  out.roots.insert(out.roots.end(), b.roots.begin(), b.roots.end());
  out.poles.insert(out.poles.end(), b.poles.begin(), b.poles.end());
  out.gamma += b.gamma;
  if (b.root_family) out.root_family = b.root_family;
  if (b.pole_family) out.pole_family = b.pole_family;
  return out;
}

}  // namespace poincare
