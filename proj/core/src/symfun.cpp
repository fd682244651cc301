#include "poincare/symfun.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "poincare/error.hpp"
#include "poincare/matrix.hpp"

namespace poincare {

namespace {

// Generic Jacobi-Trudi determinant det|v_{outer_i - inner_j - i + j}| of size
// outer.length().
Rational jacobi_trudi(const TruncatedSeries& values, const SkewShape& shape) {
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  const std::size_t n = outer.length();
  SquareMatrix<Rational> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int index = outer[i] - inner[j] - static_cast<int>(i) + static_cast<int>(j);
      m(i, j) = values.at(index);
    }
  }
  return determinant(m);
}

// Complete homogeneous values h_0..h_order of the finite variable set x.
TruncatedSeries complete_values(std::span<const Rational> x, int order) {
  std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
  c[0] = 1;
  for (const auto& v : x) {
    for (std::size_t k = 1; k < c.size(); ++k) c[k] += v * c[k - 1];
  }
  return TruncatedSeries(std::move(c));
}

// Partitions nu with lambda/nu a horizontal strip of the given size.
void horizontal_strips(const Partition& lambda, int size, std::size_t row,
                       std::vector<int>& nu, std::vector<Partition>& out) {
  if (row == lambda.length()) {
    if (size == 0) out.push_back(Partition::from_parts(nu));
    return;
  }
  const int lo = lambda[row + 1];
  const int hi = lambda[row];
  for (int part = hi; part >= lo; --part) {
    const int removed = hi - part;
    if (removed > size) break;
    nu[row] = part;
    horizontal_strips(lambda, size - removed, row + 1, nu, out);
  }
}

Integer kostka_rec(const Partition& lambda, std::span<const int> weight,
                   std::map<std::pair<Partition, std::size_t>, Integer>& memo) {
  if (weight.empty()) return lambda.empty() ? 1 : 0;
  const auto key = std::make_pair(lambda, weight.size());
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::vector<int> nu(lambda.length(), 0);
  std::vector<Partition> strips;
  horizontal_strips(lambda, weight.back(), 0, nu, strips);
  Integer total = 0;
  for (const auto& smaller : strips) {
    total += kostka_rec(smaller, weight.first(weight.size() - 1), memo);
  }
  memo.emplace(key, total);
  return total;
}

struct Cell {
  int row;
  int col;
};

// Cells of a skew shape, row by row.
std::vector<Cell> cells_of(const SkewShape& shape) {
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < shape.outer().length(); ++i) {
    for (int j = shape.inner()[i]; j < shape.outer()[i]; ++j) {
      cells.push_back({static_cast<int>(i), j});
    }
  }
  return cells;
}

class TableauGrid {
public:
  explicit TableauGrid(const SkewShape& shape) : shape_(shape) {
    const std::size_t rows = shape.outer().length();
    const int cols = rows ? shape.outer()[0] : 0;
    entries_.assign(rows, std::vector<int>(static_cast<std::size_t>(cols), 0));
  }

  bool in_shape(int i, int j) const {
    return i >= 0 && j >= 0 && j < shape_.outer()[static_cast<std::size_t>(i)] &&
           j >= shape_.inner()[static_cast<std::size_t>(i)];
  }
  int& at(int i, int j) { return entries_[i][j]; }
  int at(int i, int j) const { return entries_[i][j]; }

  // Smallest value allowed at (i, j) by the cell above.
  int column_floor(int i, int j) const {
    return in_shape(i - 1, j) ? at(i - 1, j) + 1 : 1;
  }

private:
  const SkewShape& shape_;
  std::vector<std::vector<int>> entries_;
};

void oracle_fill(const std::vector<Cell>& cells, std::size_t next,
                 TableauGrid& grid, std::span<const Rational> values,
                 const Rational& product, Rational& total) {
  if (next == cells.size()) {
    total += product;
    return;
  }
  const auto [i, j] = cells[next];
  int lo = grid.column_floor(i, j);
  if (grid.in_shape(i, j - 1)) lo = std::max(lo, grid.at(i, j - 1));
  for (int v = lo; v <= static_cast<int>(values.size()); ++v) {
    grid.at(i, j) = v;
    oracle_fill(cells, next + 1, grid, values, product * values[v - 1], total);
  }
}

struct LrSearch {
  const std::vector<Cell>& cells;  // reading order
  std::span<const int> content;
  TableauGrid& grid;
  std::vector<int> counts;
  Integer found = 0;

  void fill(std::size_t next) {
    if (next == cells.size()) {
      ++found;
      return;
    }
    const auto [i, j] = cells[next];
    const int lo = grid.column_floor(i, j);
    const int hi = grid.in_shape(i, j + 1) ? grid.at(i, j + 1)
                                           : static_cast<int>(content.size());
    for (int v = lo; v <= hi; ++v) {
      const auto k = static_cast<std::size_t>(v - 1);
      if (counts[k] == content[k]) continue;
      if (k > 0 && counts[k] + 1 > counts[k - 1]) continue;
      ++counts[k];
      grid.at(i, j) = v;
      fill(next + 1);
      --counts[k];
    }
  }
};

}  // namespace

Specialization Specialization::from_elementary(TruncatedSeries e_values) {
  auto s = dual_series(e_values);
  return Specialization(std::move(e_values), std::move(s));
}

Specialization Specialization::from_complete(TruncatedSeries s_values) {
  auto e = dual_series(s_values);
  return Specialization(std::move(e), std::move(s_values));
}

Specialization Specialization::from_factored(const FactoredSeries& f,
                                             int order) {
  return from_elementary(expand(f, order));
}

Rational jacobi_trudi_complete(const Specialization& sp,
                               const SkewShape& shape) {
  return jacobi_trudi(sp.s_values(), shape);
}

Rational jacobi_trudi_elementary(const Specialization& sp,
                                 const SkewShape& shape) {
  return jacobi_trudi(sp.e_values(), conjugate(shape));
}

Rational skew_schur_value(const Specialization& sp, const SkewShape& shape) {
  const auto& outer = shape.outer();
  const std::size_t conj_length = outer.empty() ? 0 : static_cast<std::size_t>(outer[0]);
  return conj_length < outer.length() ? jacobi_trudi_elementary(sp, shape)
                                      : jacobi_trudi_complete(sp, shape);
}

Rational schur_value(const Specialization& sp, const Partition& lambda) {
  return skew_schur_value(sp, SkewShape(lambda));
}

Rational super_schur_value(std::span<const Rational> x,
                           std::span<const Rational> y,
                           const Partition& lambda) {
  const int order = lambda.weight();
  const auto sx = Specialization::from_complete(complete_values(x, order));
  const auto sy = Specialization::from_complete(complete_values(y, order));
  const Partition lambda_conj = conjugate(lambda);
  Rational total = 0;
  for (const auto& mu : partitions_up_to(order)) {
    if (!contains(lambda, mu)) continue;
    const Rational left = schur_value(sx, mu);
    if (left == 0) continue;
    total += left * skew_schur_value(sy, SkewShape(lambda_conj, conjugate(mu)));
  }
  return total;
}

Integer kostka(const Partition& lambda, std::span<const int> weight) {
  if (std::any_of(weight.begin(), weight.end(), [](int w) { return w < 0; })) {
    throw Error(ErrorKind::InvalidArgument, "weights must be nonnegative");
  }
  if (std::accumulate(weight.begin(), weight.end(), 0) != lambda.weight()) {
    throw Error(ErrorKind::WeightMismatch, "shape and weight sizes differ");
  }
  std::map<std::pair<Partition, std::size_t>, Integer> memo;
  return kostka_rec(lambda, weight, memo);
}

Integer lr_coefficient(const Partition& mu, const Partition& gamma,
                       const Partition& lambda) {
  if (lambda.weight() != mu.weight() + gamma.weight() || !contains(lambda, mu)) {
    return 0;
  }
  const SkewShape shape(lambda, mu);
  // Reverse reading order: rows top to bottom, each right to left.
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = lambda[i] - 1; j >= mu[i]; --j) {
      cells.push_back({static_cast<int>(i), j});
    }
  }
  TableauGrid grid(shape);
  LrSearch search{cells, gamma.parts(), grid,
                  std::vector<int>(gamma.length(), 0)};
  search.fill(0);
  return search.found;
}

Rational schur_polynomial_oracle(const SkewShape& shape,
                                 std::span<const Rational> values) {
  const auto cells = cells_of(shape);
  TableauGrid grid(shape);
  Rational total = 0;
  oracle_fill(cells, 0, grid, values, Rational(1), total);
  return total;
}

Rational schur_polynomial_oracle(const Partition& lambda,
                                 std::span<const Rational> values) {
  return schur_polynomial_oracle(SkewShape(lambda), values);
}

Integer hook_content_dim(const Partition& lambda, int n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative variable count");
  if (static_cast<int>(lambda.length()) > n) return 0;
  const Partition conj = conjugate(lambda);
  Integer numerator = 1;
  Integer denominator = 1;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      const int row = static_cast<int>(i);
      numerator *= n + j - row;
      denominator *= lambda[i] - j + conj[static_cast<std::size_t>(j)] - row - 1;
    }
  }
  return numerator / denominator;
}

}  // namespace poincare
