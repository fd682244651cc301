#include "poincare/positivity.hpp"

#include <algorithm>
#include <string>

#include "poincare/error.hpp"
#include "poincare/matrix.hpp"

namespace poincare {

namespace {

bool strictly_decreasing_nonnegative(const std::vector<int>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0 || (i > 0 && v[i] >= v[i - 1])) return false;
  }
  return true;
}

// Strictly decreasing r-tuples over [0, max_index], ascending
// lexicographically when read left to right.
std::vector<std::vector<int>> decreasing_tuples(int r, int max_index) {
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(r));
  auto rec = [&](auto&& self, int pos, int upper) -> void {
    if (pos == r) {
      out.push_back(current);
      return;
    }
    const int remaining = r - pos - 1;
    for (int v = remaining; v <= upper; ++v) {
      current[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, v - 1);
    }
  };
  rec(rec, 0, max_index);
  std::sort(out.begin(), out.end());
  return out;
}

void check_bounds(const PositivityBounds& bounds) {
  if (bounds.max_order < 1 || bounds.max_index < 1) {
    throw Error(ErrorKind::InvalidArgument, "positivity bounds must be >= 1");
  }
}

// Integer copy of seq[0..max_index] scaled by the common denominator; minors
// of the scaled sequence differ from the originals by a positive factor.
std::vector<Integer> integer_scaled(std::span<const Rational> seq,
                                    int max_index) {
  if (static_cast<int>(seq.size()) <= max_index) {
    throw Error(ErrorKind::IndexOutOfRange,
                "sequence has " + std::to_string(seq.size()) +
                    " terms but the bounds need index " + std::to_string(max_index));
  }
  std::vector<Rational> head(seq.begin(), seq.begin() + max_index + 1);
  const Integer d = common_denominator(head);
  std::vector<Integer> out;
  out.reserve(head.size());
  for (const auto& v : head) out.push_back(v.get_num() * (d / v.get_den()));
  return out;
}

Integer scaled_minor(const std::vector<Integer>& a, const std::vector<int>& rows,
                     const std::vector<int>& cols) {
  const std::size_t r = rows.size();
  SquareMatrix<Integer> m(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const int k = rows[i] - cols[j];
      if (k >= 0) m(i, j) = a[static_cast<std::size_t>(k)];
    }
  }
  return determinant(std::move(m));
}

// Visits minors in the documented order; `visit` returns true to stop.
template <typename Filter, typename Visit>
void for_each_minor(const PositivityBounds& bounds, Filter&& keep,
                    Visit&& visit) {
  for (int r = 1; r <= bounds.max_order && r <= bounds.max_index + 1; ++r) {
    const auto tuples = decreasing_tuples(r, bounds.max_index);
    for (const auto& rows : tuples) {
      for (const auto& cols : tuples) {
        if (!keep(rows, cols)) continue;
        if (visit(rows, cols)) return;
      }
    }
  }
}

}  // namespace

MinorSpec::MinorSpec(std::vector<int> rows, std::vector<int> cols)
    : rows_(std::move(rows)), cols_(std::move(cols)) {
  if (rows_.empty() || rows_.size() != cols_.size() ||
      !strictly_decreasing_nonnegative(rows_) ||
      !strictly_decreasing_nonnegative(cols_)) {
    throw Error(ErrorKind::InvalidArgument,
                "minor indices must be strictly decreasing, nonnegative and of "
                "equal positive length");
  }
}

Rational toeplitz_minor(std::span<const Rational> seq, const MinorSpec& spec) {
  const auto r = static_cast<std::size_t>(spec.order());
  SquareMatrix<Rational> m(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      const int k = spec.rows()[i] - spec.cols()[j];
      if (k < 0) continue;
      if (k >= static_cast<int>(seq.size())) {
        throw Error(ErrorKind::IndexOutOfRange,
                    "minor needs a_" + std::to_string(k) + " but the sequence has " +
                        std::to_string(seq.size()) + " terms");
      }
      m(i, j) = seq[static_cast<std::size_t>(k)];
    }
  }
  return determinant(m);
}

PositivityReport check_p_sequence(std::span<const Rational> seq,
                                  PositivityBounds bounds) {
  check_bounds(bounds);
  if (seq.empty() || seq[0] != 1) {
    throw Error(ErrorKind::InvalidArgument, "sequence must start with 1");
  }
  const auto a = integer_scaled(seq, bounds.max_index);
  PositivityReport report{true, std::nullopt, bounds};
  // A column whose largest index is negative, or a row whose largest index
  // is negative, is identically zero.
  auto nonzero_candidate = [](const std::vector<int>& rows,
                              const std::vector<int>& cols) {
    return cols.front() <= rows.front() && cols.back() <= rows.back();
  };
  for_each_minor(bounds, nonzero_candidate,
                 [&](const std::vector<int>& rows, const std::vector<int>& cols) {
                   if (sgn(scaled_minor(a, rows, cols)) >= 0) return false;
                   MinorSpec spec(rows, cols);
                   auto value = toeplitz_minor(seq, spec);
                   report.passed = false;
                   report.witness = MinorWitness{std::move(spec), std::move(value)};
                   return true;
                 });
  return report;
}

PPReport check_pp_sequence(const FactoredSeries& f, PositivityBounds bounds) {
  check_bounds(bounds);
  f.validate();
  PPReport out;
  if (f.gamma > 0) {
    out.condition = 1;
    out.reason = "exponential weight gamma > 0";
  } else if (f.root_family) {
    out.condition = 2;
    out.reason = "infinitely many positive roots";
  } else if (f.pole_family) {
    out.condition = 3;
    out.reason = "infinitely many positive poles";
  } else {
    out.reason = "finite roots and poles with gamma = 0; no sufficient condition applies";
  }

  const auto seq = expand(f, bounds.max_index);
  const auto a = integer_scaled(seq.coeffs(), bounds.max_index);
  auto contained = [](const std::vector<int>& rows, const std::vector<int>& cols) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (cols[i] > rows[i]) return false;
    }
    return true;
  };
  out.contained_minors.bounds = bounds;
  for_each_minor(bounds, contained,
                 [&](const std::vector<int>& rows, const std::vector<int>& cols) {
                   if (sgn(scaled_minor(a, rows, cols)) > 0) return false;
                   MinorSpec spec(rows, cols);
                   auto value = toeplitz_minor(seq.coeffs(), spec);
                   out.contained_minors.passed = false;
                   out.contained_minors.witness =
                       MinorWitness{std::move(spec), std::move(value)};
                   return true;
                 });
  return out;
}

}  // namespace poincare
