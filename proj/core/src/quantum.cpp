#include "poincare/quantum.hpp"

#include <algorithm>
#include <sstream>

#include "poincare/error.hpp"

namespace poincare {

namespace {

constexpr PositivityBounds kPSequenceBounds{4, 10};

std::string describe(const Partition& p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

Rational product_of(std::span<const Rational> values) {
  Rational p = 1;
  for (const auto& v : values) p *= v;
  return p;
}

// First index k <= limit whose coefficient is not a nonnegative integer.
std::optional<int> first_bad_coefficient(const TruncatedSeries& s, int limit) {
  for (int k = 0; k <= std::min(limit, s.order()); ++k) {
    if (!is_integral(s[k]) || s[k] < 0) return k;
  }
  return std::nullopt;
}

BoundCheck coefficient_check(std::string name, const TruncatedSeries& s,
                             int limit, const char* symbol) {
  BoundCheck check{std::move(name), true, ""};
  if (auto bad = first_bad_coefficient(s, limit)) {
    check.passed = false;
    check.detail = std::string(symbol) + "_" + std::to_string(*bad) + " = " +
                   to_string(s[*bad]);
  } else {
    check.detail = "checked up to index " + std::to_string(std::min(limit, s.order()));
  }
  return check;
}

FactoredSeries ones(std::size_t roots, std::size_t poles) {
  FactoredSeries f;
  f.roots.assign(roots, Rational(1));
  f.poles.assign(poles, Rational(1));
  return f;
}

}  // namespace

QuantumSpaceSpec::QuantumSpaceSpec(FactoredSeries p_lambda, Rational q)
    : p_lambda_(std::move(p_lambda)), q_(std::move(q)) {
  if (p_lambda_.gamma != 0) {
    throw Error(ErrorKind::InvalidSpec, "a quantum space has no exponential factor");
  }
  if (!p_lambda_.is_finite()) {
    throw Error(ErrorKind::InvalidSpec, "a quantum space has finitely many roots and poles");
  }
  if (q_ == 0) throw Error(ErrorKind::InvalidSpec, "q must be nonzero");
  try {
    p_lambda_.validate();
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidSpec, e.what());
  }
}

QuantumSpaceSpec::QuantumSpaceSpec(std::vector<Rational> roots,
                                   std::vector<Rational> poles, Rational q)
    : QuantumSpaceSpec(
          FactoredSeries{std::move(roots), std::move(poles), Rational(0),
                         std::nullopt, std::nullopt},
          std::move(q)) {}

TruncatedSeries lambda_series(const QuantumSpaceSpec& spec, int order) {
  return expand(spec.p_lambda(), order);
}

TruncatedSeries s_series(const QuantumSpaceSpec& spec, int order) {
  return dual_series(lambda_series(spec, order));
}

Specialization specialization(const QuantumSpaceSpec& spec, int order) {
  return Specialization::from_elementary(lambda_series(spec, order));
}

DimensionTable::DimensionTable(
    int max_weight, std::vector<std::pair<Partition, Integer>> entries)
    : max_weight_(max_weight), entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    index_.emplace(entries_[i].first, i);
  }
}

const Integer& DimensionTable::at(const Partition& lambda) const {
  const auto it = index_.find(lambda);
  if (it == index_.end()) {
    throw Error(ErrorKind::InvalidArgument,
                "partition " + describe(lambda) + " is not in the table");
  }
  return entries_[it->second].second;
}

DimensionTable comodule_dims(const QuantumSpaceSpec& spec, int max_weight) {
  if (max_weight < 0) throw Error(ErrorKind::InvalidArgument, "negative weight");
  const auto sp = specialization(spec, max_weight);
  std::vector<std::pair<Partition, Integer>> entries;
  for (auto& lambda : partitions_up_to(max_weight)) {
    const Rational value = schur_value(sp, lambda);
    if (!is_integral(value)) {
      throw Error(ErrorKind::NonIntegralDimension,
                  "m" + describe(lambda) + " = " + to_string(value) +
                      " is not an integer");
    }
    if (value < 0) {
      throw Error(ErrorKind::NegativeDimension,
                  "m" + describe(lambda) + " = " + to_string(value) + " is negative");
    }
    entries.emplace_back(std::move(lambda), value.get_num());
  }
  return DimensionTable(max_weight, std::move(entries));
}

TruncatedSeries e_series_via_dims(const QuantumSpaceSpec& spec, int order,
                                  DimensionCheck check) {
  if (order < 0) throw Error(ErrorKind::InvalidArgument, "negative order");
  std::vector<Rational> e(static_cast<std::size_t>(order) + 1);
  if (check == DimensionCheck::enforce) {
    const auto table = comodule_dims(spec, order);
    for (const auto& [lambda, dim] : table.entries()) {
      const Integer square = dim * dim;
      e[static_cast<std::size_t>(lambda.weight())] += square;
    }
  } else {
    const auto sp = specialization(spec, order);
    for (const auto& lambda : partitions_up_to(order)) {
      const Rational m = schur_value(sp, lambda);
      e[static_cast<std::size_t>(lambda.weight())] += m * m;
    }
  }
  return TruncatedSeries(std::move(e));
}

TruncatedSeries e_series_via_star(const QuantumSpaceSpec& spec, int order) {
  const auto s = s_series(spec, order);
  return lambda_product(s, s);
}

std::string_view to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::quasi_even: return "quasi-even";
    case SpaceKind::even: return "even";
    case SpaceKind::quasi_odd_even: return "quasi-odd-even";
    case SpaceKind::odd_even: return "odd-even";
  }
  return "unknown";
}

bool Classification::hecke_plausible() const noexcept {
  return integrality_ok &&
         std::all_of(bound_checks.begin(), bound_checks.end(),
                     [](const BoundCheck& c) { return c.passed; });
}

const BoundCheck* Classification::find_check(std::string_view name) const noexcept {
  for (const auto& c : bound_checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Classification classify(const QuantumSpaceSpec& spec, int max_weight) {
  if (max_weight < 0) throw Error(ErrorKind::InvalidArgument, "negative weight");
  const int m = static_cast<int>(spec.roots().size());
  const int n = static_cast<int>(spec.poles().size());
  const int order = std::max({max_weight, m, kPSequenceBounds.max_index, 1});
  const auto lam = lambda_series(spec, order);
  const auto s = dual_series(lam);
  const Rational& dim_v = lam[1];

  Classification c;
  c.max_weight = max_weight;

  auto lambda_check = coefficient_check("lambda_integral_nonnegative", lam, max_weight, "lambda");
  auto s_check = coefficient_check("s_integral_nonnegative", s, max_weight, "s");
  BoundCheck dims_check{"dims_integral_nonnegative", true, ""};
  {
    const auto sp = Specialization::from_elementary(lam.truncated(std::max(max_weight, 0)));
    for (const auto& lambda : partitions_up_to(max_weight)) {
      const Rational v = schur_value(sp, lambda);
      if (!is_integral(v) || v < 0) {
        dims_check.passed = false;
        dims_check.detail = "m" + describe(lambda) + " = " + to_string(v);
        break;
      }
    }
    if (dims_check.passed) {
      dims_check.detail = "checked all partitions of weight <= " + std::to_string(max_weight);
    }
  }
  c.integrality_ok = lambda_check.passed && s_check.passed && dims_check.passed;
  c.bound_checks.push_back(std::move(lambda_check));
  c.bound_checks.push_back(std::move(s_check));
  c.bound_checks.push_back(std::move(dims_check));

  const auto tp = check_p_sequence(lam.coeffs(), kPSequenceBounds);
  c.bound_checks.push_back(
      {"p_sequence", tp.passed,
       tp.passed ? "all Toeplitz minors nonnegative up to order 4, index 10"
                 : "negative minor " + to_string(tp.witness->value)});

  std::optional<FactoredSeries> extremal;
  if (n == 0) {
    c.rank = m;
    bool palindromic = true;
    for (int k = 0; k <= m; ++k) palindromic = palindromic && lam[k] == lam[m - k];
    c.reciprocal = palindromic;
    const bool top_is_one = product_of(spec.roots()) == 1;
    if (top_is_one) {
      c.bound_checks.push_back(
          {"reciprocity", palindromic,
           palindromic ? "lambda_k = lambda_{r-k}"
                       : "lambda_r = 1 but the exterior series is not palindromic"});
    }
    c.kind = top_is_one && palindromic ? SpaceKind::even : SpaceKind::quasi_even;
    if (c.kind == SpaceKind::even) {
      c.bound_checks.push_back({"rank_upper_bound", Rational(m) <= dim_v,
                                "r = " + std::to_string(m) + ", dim V = " + to_string(dim_v)});
      c.bound_checks.push_back({"rank_lower_bound", dim_v < 2 || m >= 2,
                                "2 <= r required once dim V >= 2"});
      if (Rational(m) == dim_v) {
        extremal = ones(0, static_cast<std::size_t>(m) * m);
      }
    }
  } else {
    c.super_rank = std::make_pair(m, n);
    const bool balanced = product_of(spec.roots()) == 1 && product_of(spec.poles()) == 1;
    c.kind = balanced ? SpaceKind::odd_even : SpaceKind::quasi_odd_even;
    if (balanced) {
      c.bound_checks.push_back(
          {"super_rank_bound", Rational(m + n) <= dim_v,
           "m + n = " + std::to_string(m + n) + ", dim V = " + to_string(dim_v)});
      if (Rational(m + n) == dim_v) {
        extremal = ones(2 * static_cast<std::size_t>(m) * n,
                        static_cast<std::size_t>(m) * m + static_cast<std::size_t>(n) * n);
      }
    }
  }

  if (extremal) {
    const bool agrees = expand(*extremal, max_weight) == e_series_via_star(spec, max_weight);
    c.bound_checks.push_back({"extremal_closed_form", agrees,
                              agrees ? "closed form matches P_S * P_S up to the weight"
                                     : "closed form disagrees with P_S * P_S"});
    c.extremal_closed_form = std::move(extremal);
  }
  return c;
}

QuantumSpaceSpec hecke_sum(const QuantumSpaceSpec& a, const QuantumSpaceSpec& b) {
  if (a.q() != b.q()) {
    throw Error(ErrorKind::MismatchedParameter,
                "Hecke sum needs a common q (" + to_string(a.q()) + " vs " +
                    to_string(b.q()) + ")");
  }
  return QuantumSpaceSpec(factored_multiply(a.p_lambda(), b.p_lambda()), a.q());
}

}  // namespace poincare
