#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poincare/partition.hpp"
#include "poincare/positivity.hpp"
#include "poincare/rational.hpp"
#include "poincare/series.hpp"
#include "poincare/symfun.hpp"

namespace poincare {

// Poincare series of the exterior algebra in factored form,
// prod(1 + t_i t) / prod(1 - u_j t), plus the Hecke parameter q, which is
// carried but never enters a computation.
class QuantumSpaceSpec {
public:
  // Throws Error{InvalidSpec} for gamma != 0, infinite families,
  // nonpositive roots/poles, or q = 0.
  QuantumSpaceSpec(FactoredSeries p_lambda, Rational q);
  QuantumSpaceSpec(std::vector<Rational> roots, std::vector<Rational> poles,
                   Rational q = Rational(1));

  const FactoredSeries& p_lambda() const noexcept { return p_lambda_; }
  std::span<const Rational> roots() const noexcept { return p_lambda_.roots; }
  std::span<const Rational> poles() const noexcept { return p_lambda_.poles; }
  const Rational& q() const noexcept { return q_; }

  friend bool operator==(const QuantumSpaceSpec&,
                         const QuantumSpaceSpec&) = default;

private:
  FactoredSeries p_lambda_;
  Rational q_;
};

TruncatedSeries lambda_series(const QuantumSpaceSpec& spec, int order);
TruncatedSeries s_series(const QuantumSpaceSpec& spec, int order);
Specialization specialization(const QuantumSpaceSpec& spec, int order);

// Dimensions m_lambda of the simple comodules for all |lambda| <= max_weight,
// in partitions_up_to order.
class DimensionTable {
public:
  DimensionTable(int max_weight,
                 std::vector<std::pair<Partition, Integer>> entries);

  int max_weight() const noexcept { return max_weight_; }
  const std::vector<std::pair<Partition, Integer>>& entries() const noexcept {
    return entries_;
  }
  // Throws Error{InvalidArgument} if lambda is heavier than max_weight.
  const Integer& at(const Partition& lambda) const;

private:
  int max_weight_;
  std::vector<std::pair<Partition, Integer>> entries_;
  std::map<Partition, std::size_t> index_;
};

// Throws Error{NonIntegralDimension} or Error{NegativeDimension} at the first
// offending partition in table order.
DimensionTable comodule_dims(const QuantumSpaceSpec& spec, int max_weight);

enum class DimensionCheck {
  // Every m_lambda must be a nonnegative integer (comodule_dims rules).
  enforce,
  // Use the raw Schur values; the identity e_n = sum m_lambda^2 holds for
  // any specialization.
  skip,
};

// e_n = sum over lambda |- n of m_lambda^2.
TruncatedSeries e_series_via_dims(const QuantumSpaceSpec& spec, int order,
                                  DimensionCheck check = DimensionCheck::enforce);

// P_E = P_S * P_S in the lambda-ring.
TruncatedSeries e_series_via_star(const QuantumSpaceSpec& spec, int order);

enum class SpaceKind { quasi_even, even, quasi_odd_even, odd_even };

std::string_view to_string(SpaceKind kind) noexcept;

struct BoundCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Classification {
  SpaceKind kind = SpaceKind::quasi_even;
  std::optional<int> rank;
  std::optional<std::pair<int, int>> super_rank;
  // lambda_k == lambda_{r-k} for all k; only meaningful in the polynomial case.
  bool reciprocal = false;
  // lambda_i, s_i and m_lambda are nonnegative integers up to the weight.
  bool integrality_ok = true;
  std::vector<BoundCheck> bound_checks;
  // Closed form of P_E when the dimension bound holds with equality.
  std::optional<FactoredSeries> extremal_closed_form;
  int max_weight = 0;

  // All recorded checks passed. Necessary conditions only.
  bool hecke_plausible() const noexcept;
  const BoundCheck* find_check(std::string_view name) const noexcept;
};

Classification classify(const QuantumSpaceSpec& spec, int max_weight);

// Direct sum of Hecke operators: the exterior series multiply. Throws
// Error{MismatchedParameter} if the q values differ.
QuantumSpaceSpec hecke_sum(const QuantumSpaceSpec& a,
                           const QuantumSpaceSpec& b);

}  // namespace poincare
