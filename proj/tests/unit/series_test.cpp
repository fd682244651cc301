#include <doctest.h>

#include "oracles.hpp"
#include "poincare/series.hpp"

using oracle::series;
using poincare::FactoredSeries;
using poincare::Rational;
using poincare::TruncatedSeries;

namespace {

Rational q(long n, long d = 1) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

FactoredSeries factored(std::vector<Rational> roots, std::vector<Rational> poles,
                        Rational gamma = 0) {
  FactoredSeries f;
  f.roots = std::move(roots);
  f.poles = std::move(poles);
  f.gamma = std::move(gamma);
  return f;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("expand") {
  CHECK(expand(factored({1, 1}, {}), 3) == series({1, 2, 1, 0}));
  // (1+t) times the geometric series, convolved directly.
  const auto direct = oracle::convolve({1, 1}, {1, 1, 1, 1}, 3);
  CHECK(expand(factored({1}, {1}), 3) == TruncatedSeries(direct));
  CHECK(expand(factored({1}, {1}), 3) == series({1, 2, 2, 2}));
  CHECK(expand(factored({}, {}, 1), 3) == series({1, 1, q(1, 2), q(1, 6)}));
  CHECK(expand(factored({}, {}), 0) == series({1}));
  CHECK_THROWS_AS(expand(factored({-1}, {}), 3), poincare::Error);
  CHECK_THROWS_AS(expand(factored({}, {0}), 3), poincare::Error);
  CHECK_THROWS_AS(expand(factored({}, {}, -1), 3), poincare::Error);
}

TEST_CASE("expand with geometric families matches long finite truncations") {
  // prod_{i<60} (1 + 2^-i t) agrees with the closed form far beyond the
  // order checked, since the tail factors are 1 + O(2^-60).
  FactoredSeries fam;
  fam.root_family = poincare::GeometricFamily{1, q(1, 2)};
  const auto closed = expand(fam, 5);
  std::vector<Rational> roots;
  Rational p = 1;
  for (int i = 0; i < 60; ++i, p /= 2) roots.push_back(p);
  const auto finite = oracle::product_of_factors(roots, {}, 5);
  for (int k = 0; k <= 5; ++k) {
    const Rational diff = closed[k] - finite[k];
    CHECK(abs(diff) < Rational(1, 1000000));
  }
  // prod_i (1 - r^i t)^-1 has coefficient 1/((1-r)...(1-r^k)).
  FactoredSeries poles;
  poles.pole_family = poincare::GeometricFamily{1, q(1, 3)};
  const auto e = expand(poles, 2);
  CHECK(e[1] == 1 / (1 - q(1, 3)));
  CHECK(e[2] == 1 / ((1 - q(1, 3)) * (1 - q(1, 9))));

  FactoredSeries bad;
  bad.pole_family = poincare::GeometricFamily{1, 1};
  CHECK_THROWS_AS(expand(bad, 2), poincare::Error);
}

TEST_CASE("multiply") {
  CHECK(multiply(series({1, 1, 0}), series({1, 1, 0})) == series({1, 2, 1}));
  CHECK(TruncatedSeries(oracle::convolve({1, 2, 1}, {1, -2, 3}, 2)) == series({1, 0, 0}));
  CHECK(multiply(series({1, 2, 1}), series({1, -2, 3})) == series({1, 0, 0}));
  const auto p = series({3, q(-1, 2), 7, 0, 1});
  CHECK(multiply(p, TruncatedSeries::one(4)) == p);
  // Mismatched orders truncate to the smaller one.
  CHECK(multiply(p, TruncatedSeries::one(2)).order() == 2);
}

TEST_CASE("invert") {
  CHECK(invert(series({1, -1, 0, 0})) == series({1, 1, 1, 1}));
  CHECK(invert(series({1, 1, 1, 0})) == series({1, -1, 0, 1}));
  CHECK(invert(series({2, 0})) == series({q(1, 2), 0}));
  try {
    invert(series({0, 1}));
    FAIL("expected ZeroConstantTerm");
  } catch (const poincare::Error& e) {
    CHECK(e.kind() == poincare::ErrorKind::ZeroConstantTerm);
  }
}

TEST_CASE("dual_series") {
  CHECK(dual_series(series({1, 2, 1, 0, 0})) == series({1, 2, 3, 4, 5}));
  CHECK(dual_series(series({1, 0, 0, 0})) == series({1, 0, 0, 0}));
  CHECK(dual_series(series({1, 2, 2, 2})) == series({1, 2, 2, 2}));
  CHECK_THROWS_AS(dual_series(series({0, 1})), poincare::Error);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = oracle::random_unit_series(rng, 12);
    const auto d = dual_series(p);
    CHECK(dual_series(d) == p);
    CHECK(multiply(p, negate_variable(d)) == TruncatedSeries::one(12));
  }
}

TEST_CASE("log_derivative") {
  CHECK(log_derivative(series({1, 1, 1, 1})) == series({1, 1, 1}));
  CHECK(log_derivative(series({1, 2, 3, 4})) == series({2, 2, 2}));
  // (1+t)/(1-t): p_r = 1 + (-1)^(r-1).
  CHECK(log_derivative(series({1, 2, 2, 2})) == series({2, 0, 2}));
  CHECK_THROWS_AS(log_derivative(series({0, 1, 2})), poincare::Error);
  CHECK_THROWS_AS(log_derivative(series({1})), poincare::Error);

  // p_r = sum of u_j^r for a product of geometric factors.
  const auto s = expand(factored({}, {2, q(1, 3), 5}), 7);
  const auto ps = log_derivative(s);
  for (int r = 1; r <= 7; ++r) {
    Rational expected = 0;
    for (const Rational u : {Rational(2), q(1, 3), Rational(5)}) {
      Rational power = 1;
      for (int i = 0; i < r; ++i) power *= u;
      expected += power;
    }
    CHECK(ps[r - 1] == expected);
  }
}

TEST_CASE("exp_integral") {
  CHECK(exp_integral(series({0, 0, 0})) == series({1, 0, 0, 0}));
  CHECK(exp_integral(series({1, 1, 1})) == series({1, 1, 1, 1}));
  CHECK(exp_integral(series({2, 2, 2})) == series({1, 2, 3, 4}));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = oracle::random_unit_series(rng, 12);
    CHECK(exp_integral(log_derivative(p)) == p);
    const auto g = oracle::random_unit_series(rng, 11);
    CHECK(log_derivative(exp_integral(g)) == g);
  }
}

TEST_CASE("lambda_product examples") {
  const auto a = expand(factored({}, {2}), 6);
  const auto b = expand(factored({}, {3}), 6);
  CHECK(lambda_product(a, b) == expand(factored({}, {6}), 6));
  const auto g = series({1, 1, 1, 1});
  CHECK(lambda_product(g, g) == g);
  CHECK(lambda_product(series({1, 2, 2, 2}), series({1, 2, 2, 2})) == series({1, 4, 8, 12}));
  CHECK(lambda_product(series({1, 2, 2, 2}), series({1, 2, 2, 2})) ==
        TruncatedSeries(oracle::product_of_factors({1, 1}, {1, 1}, 3)));
  CHECK_THROWS_AS(lambda_product(series({0, 1}), g), poincare::Error);
  CHECK_THROWS_AS(lambda_product(series({2, 1}), g), poincare::Error);
  CHECK(lambda_product(series({1}), g) == series({1}));
}

TEST_CASE("lambda_product ring laws") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = oracle::random_unit_series(rng, 10);
    const auto r = oracle::random_unit_series(rng, 10);
    const auto s = oracle::random_unit_series(rng, 10);
    CHECK(lambda_product(p, r) == lambda_product(r, p));
    CHECK(lambda_product(lambda_product(p, r), s) == lambda_product(p, lambda_product(r, s)));
    CHECK(lambda_product(p, multiply(r, s)) ==
          multiply(lambda_product(p, r), lambda_product(p, s)));
    // (1-t)^-1 is the multiplicative unit.
    CHECK(lambda_product(p, expand(factored({}, {1}), 10)) == p);
  }
}

TEST_CASE("lambda_product agrees with the pairwise product of linear factors") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = factored(oracle::random_positives(rng, 3, 4), oracle::random_positives(rng, 3, 4));
    const auto b = factored(oracle::random_positives(rng, 3, 4), oracle::random_positives(rng, 3, 4));
    CHECK(lambda_product(expand(a, 9), expand(b, 9)) ==
          TruncatedSeries(oracle::star_by_pairs(a, b, 9)));
  }
  // Root-only inputs: (1 + xt) * (1 + yt) = (1 - xyt)^-1.
  const auto x = factored({2, 3}, {});
  const auto y = factored({q(1, 2)}, {});
  CHECK(lambda_product(expand(x, 8), expand(y, 8)) == expand(factored({}, {1, q(3, 2)}), 8));
}

TEST_CASE("factored_multiply") {
  const auto u = factored_multiply(factored({1}, {}), factored({1}, {1}));
  CHECK(u.roots == std::vector<Rational>{1, 1});
  CHECK(u.poles == std::vector<Rational>{1});
  const auto f = factored({q(2, 3)}, {4}, q(1, 2));
  CHECK(factored_multiply(f, FactoredSeries{}) == f);
  CHECK(expand(factored_multiply(factored({2}, {}), factored({}, {3})), 3) ==
        TruncatedSeries(oracle::product_of_factors({2}, {3}, 3)));
  CHECK(expand(factored_multiply(factored({2}, {}), factored({}, {3})), 3) == series({1, 5, 15, 45}));

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = factored(oracle::random_positives(rng, 3, 4), oracle::random_positives(rng, 3, 4),
                            trial % 2 ? q(1, 2) : Rational(0));
    const auto b = factored(oracle::random_positives(rng, 3, 4), oracle::random_positives(rng, 3, 4));
    CHECK(expand(factored_multiply(a, b), 12) == multiply(expand(a, 12), expand(b, 12)));
  }
}

TEST_CASE("truncation bookkeeping") {
  const auto p = series({1, 2, 3});
  CHECK(p.at(-1) == 0);
  CHECK_THROWS_AS(p.at(3), poincare::Error);
  CHECK(p.truncated(1) == series({1, 2}));
  CHECK_THROWS_AS(p.truncated(4), poincare::Error);
  CHECK_THROWS_AS(TruncatedSeries(std::vector<Rational>{}), poincare::Error);
}

}
