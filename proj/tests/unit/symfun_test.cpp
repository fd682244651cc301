#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "poincare/symfun.hpp"

using poincare::FactoredSeries;
using poincare::Integer;
using poincare::Partition;
using poincare::Rational;
using poincare::SkewShape;
using poincare::Specialization;

namespace {

Specialization classical(int n, int order) {
  FactoredSeries f;
  f.roots.assign(static_cast<std::size_t>(n), Rational(1));
  return Specialization::from_factored(f, order);
}

Specialization super_spec(std::vector<Rational> x, std::vector<Rational> y, int order) {
  FactoredSeries f;
  f.roots = std::move(x);
  f.poles = std::move(y);
  return Specialization::from_factored(f, order);
}

// Sum of K(lambda, mu) over all compositions mu of |lambda| with k parts.
Integer kostka_over_compositions(const Partition& lambda, int k) {
  Integer total = 0;
  std::vector<int> mu(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == k - 1) {
      mu[pos] = remaining;
      total += poincare::kostka(lambda, mu);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      mu[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, lambda.weight());
  return total;
}

}  // namespace

TEST_SUITE("symfun") {

TEST_CASE("schur_value examples") {
  const auto sp = classical(2, 6);
  CHECK(poincare::hook_content_dim(Partition{2, 1}, 2) == 2);
  CHECK(schur_value(sp, Partition{2, 1}) == 2);
  CHECK(schur_value(sp, Partition{1, 1, 1}) == 0);
  CHECK(schur_value(sp, Partition{}) == 1);
  CHECK(schur_value(super_spec({3}, {}, 0), Partition{}) == 1);
}

TEST_CASE("schur_value reports insufficient precision") {
  const auto sp = classical(2, 2);
  try {
    schur_value(sp, Partition{2, 1});  // needs index 2 + 2 - 1 = 3
    FAIL("expected InsufficientPrecision");
  } catch (const poincare::Error& e) {
    CHECK(e.kind() == poincare::ErrorKind::InsufficientPrecision);
  }
  CHECK_NOTHROW(schur_value(sp, Partition{2}));
}

TEST_CASE("skew_schur_value examples") {
  const auto sp = classical(2, 6);
  // m_(2) + m_(1,1) = 3 + 1.
  CHECK(schur_value(sp, Partition{2}) + schur_value(sp, Partition{1, 1}) == 4);
  CHECK(skew_schur_value(sp, SkewShape(Partition{2, 1}, Partition{1})) == 4);
  CHECK(skew_schur_value(sp, SkewShape(Partition{3, 2}, Partition{3, 2})) == 1);
  CHECK(skew_schur_value(sp, SkewShape(Partition{3, 1})) == schur_value(sp, Partition{3, 1}));
  CHECK_THROWS_AS(SkewShape(Partition{2}, Partition{1, 1}), poincare::Error);
}

TEST_CASE("dual Jacobi-Trudi forms agree") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sp = Specialization::from_elementary(oracle::random_unit_series(rng, 8));
    for (const auto& lambda : poincare::partitions_up_to(8)) {
      const SkewShape shape(lambda);
      CHECK(jacobi_trudi_complete(sp, shape) == jacobi_trudi_elementary(sp, shape));
    }
  }
}

TEST_CASE("skew Schur expands with Littlewood-Richardson coefficients") {
  std::mt19937_64 rng(12);
  const auto sp = Specialization::from_elementary(oracle::random_unit_series(rng, 6));
  const auto all = poincare::partitions_up_to(6);
  for (const auto& lambda : all) {
    for (const auto& mu : all) {
      if (!contains(lambda, mu)) continue;
      Rational expansion = 0;
      for (const auto& gamma : poincare::enumerate_partitions(lambda.weight() - mu.weight())) {
        expansion += Rational(lr_coefficient(mu, gamma, lambda)) * schur_value(sp, gamma);
      }
      CHECK(skew_schur_value(sp, SkewShape(lambda, mu)) == expansion);
    }
  }
}

TEST_CASE("lr_coefficient examples and symmetry") {
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{2}) == 1);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{1, 1}) == 1);
  CHECK(lr_coefficient(Partition{2}, Partition{1}, Partition{2, 1}) == 1);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{1}, Partition{4}) == 0);
  CHECK(lr_coefficient(Partition{2, 1}, Partition{2, 1}, Partition{3, 2, 1}) == 2);
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == 0);

  const auto all = poincare::partitions_up_to(4);
  for (const auto& mu : all) {
    for (const auto& gamma : all) {
      for (const auto& lambda : poincare::enumerate_partitions(mu.weight() + gamma.weight())) {
        const auto c = lr_coefficient(mu, gamma, lambda);
        CHECK(c >= 0);
        CHECK(c == lr_coefficient(gamma, mu, lambda));
      }
    }
  }
}

TEST_CASE("lr_coefficient matches the Kostka expansion of skew shapes") {
  for (const auto& mu : poincare::partitions_up_to(3)) {
    for (const auto& gamma : poincare::partitions_up_to(5 - mu.weight())) {
      for (const auto& lambda : poincare::enumerate_partitions(mu.weight() + gamma.weight())) {
        CHECK(lr_coefficient(mu, gamma, lambda) == oracle::lr_by_kostka(mu, gamma, lambda));
      }
    }
  }
}

TEST_CASE("lr_coefficient matches polynomial products") {
  std::mt19937_64 rng(13);
  for (int total = 1; total <= 6; ++total) {
    for (int point = 0; point < 3; ++point) {
      std::vector<Rational> values(static_cast<std::size_t>(total));
      for (auto& v : values) v = oracle::random_positive(rng, 4);
      std::map<Partition, Rational> memo;
      auto eval = [&](const Partition& p) {
        auto it = memo.find(p);
        if (it == memo.end()) it = memo.emplace(p, schur_polynomial_oracle(p, values)).first;
        return it->second;
      };
      for (int a = 0; a <= total; ++a) {
        for (const auto& mu : poincare::enumerate_partitions(a)) {
          for (const auto& gamma : poincare::enumerate_partitions(total - a)) {
            Rational rhs = 0;
            for (const auto& lambda : poincare::enumerate_partitions(total)) {
              rhs += Rational(lr_coefficient(mu, gamma, lambda)) * eval(lambda);
            }
            CHECK(eval(mu) * eval(gamma) == rhs);
          }
        }
      }
    }
  }
}

TEST_CASE("super_schur_value") {
  const std::vector<Rational> one{1};
  CHECK(super_schur_value(one, one, Partition{1}) == 2);
  CHECK(super_schur_value(one, one, Partition{2, 1}) == 2);
  CHECK(super_schur_value(one, one, Partition{2, 2}) == 0);
  CHECK(schur_value(super_spec({1}, {1}, 3), Partition{2, 1}) == 2);
}

TEST_CASE("super_schur_value equals the super specialization") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 6; ++trial) {
    const auto x = oracle::random_positives(rng, 2, 4);
    const auto y = oracle::random_positives(rng, 2, 4);
    const auto sp = super_spec(x, y, 6);
    for (const auto& lambda : poincare::partitions_up_to(6)) {
      CHECK(super_schur_value(x, y, lambda) == schur_value(sp, lambda));
    }
  }
}

TEST_CASE("super_schur_value support is the fat hook") {
  std::mt19937_64 rng(15);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      std::vector<Rational> x(static_cast<std::size_t>(m)), y(static_cast<std::size_t>(n));
      for (auto& v : x) v = oracle::random_positive(rng, 4);
      for (auto& v : y) v = oracle::random_positive(rng, 4);
      for (const auto& lambda : poincare::partitions_up_to(8)) {
        CHECK((super_schur_value(x, y, lambda) != 0) == in_hook_region(lambda, m, n));
      }
    }
  }
}

TEST_CASE("classical specialization matches hook-content") {
  for (int n = 0; n <= 3; ++n) {
    const auto sp = classical(n, 8);
    for (const auto& lambda : poincare::partitions_up_to(8)) {
      CHECK(schur_value(sp, lambda) == Rational(poincare::hook_content_dim(lambda, n)));
    }
  }
}

TEST_CASE("kostka") {
  CHECK(poincare::kostka(Partition{2, 1}, std::vector<int>{1, 1, 1}) == 2);
  CHECK(poincare::kostka(Partition{3, 2}, std::vector<int>{3, 2}) == 1);
  CHECK(poincare::kostka(Partition{1, 1}, std::vector<int>{2}) == 0);
  CHECK(poincare::kostka(Partition{}, std::vector<int>{}) == 1);
  CHECK(poincare::kostka(Partition{2, 1}, std::vector<int>{0, 1, 0, 2}) ==
        poincare::kostka(Partition{2, 1}, std::vector<int>{2, 1}));
  try {
    poincare::kostka(Partition{2, 1}, std::vector<int>{1, 1});
    FAIL("expected WeightMismatch");
  } catch (const poincare::Error& e) {
    CHECK(e.kind() == poincare::ErrorKind::WeightMismatch);
  }
  // Summing over all weights counts every tableau: s_lambda(1^k).
  for (const auto& lambda : poincare::partitions_up_to(6)) {
    for (int k = 1; k <= 3; ++k) {
      CHECK(kostka_over_compositions(lambda, k) == poincare::hook_content_dim(lambda, k));
    }
    // Kostka numbers are invariant under permuting the weight.
    auto w = std::vector<int>(lambda.parts().begin(), lambda.parts().end());
    std::reverse(w.begin(), w.end());
    CHECK(poincare::kostka(lambda, w) == 1);
  }
}

TEST_CASE("schur_polynomial_oracle") {
  CHECK(schur_polynomial_oracle(Partition{2, 1}, std::vector<Rational>{1, 1}) == 2);
  const std::vector<Rational> abc{2, Rational(1, 3), 5};
  CHECK(schur_polynomial_oracle(Partition{1}, abc) == 2 + Rational(1, 3) + 5);
  CHECK(schur_polynomial_oracle(Partition{1, 1, 1}, std::vector<Rational>{3, 7}) == 0);
  // Skew (2,1)/(1) in two variables a, b: (a+b)^2.
  CHECK(schur_polynomial_oracle(SkewShape(Partition{2, 1}, Partition{1}),
                                std::vector<Rational>{2, 3}) == 25);
}

TEST_CASE("hook_content_dim") {
  CHECK(poincare::hook_content_dim(Partition{1}, 7) == 7);
  CHECK(poincare::hook_content_dim(Partition{1, 1, 1}, 2) == 0);
  CHECK(poincare::hook_content_dim(Partition{2, 1}, 3) == 8);
}

}
