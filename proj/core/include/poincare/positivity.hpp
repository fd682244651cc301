#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poincare/rational.hpp"
#include "poincare/series.hpp"

namespace poincare {

// Row and column indices of a Toeplitz minor det|a_{rows_i - cols_j}|. Both
// are strictly decreasing sequences of nonnegative integers of equal length.
class MinorSpec {
public:
  // Throws Error{InvalidArgument} if the invariants fail.
  MinorSpec(std::vector<int> rows, std::vector<int> cols);

  std::span<const int> rows() const noexcept { return rows_; }
  std::span<const int> cols() const noexcept { return cols_; }
  int order() const noexcept { return static_cast<int>(rows_.size()); }

  friend bool operator==(const MinorSpec&, const MinorSpec&) = default;

private:
  std::vector<int> rows_;
  std::vector<int> cols_;
};

struct MinorWitness {
  MinorSpec minor;
  Rational value;
};

struct PositivityBounds {
  int max_order = 4;
  int max_index = 10;
};

struct PositivityReport {
  bool passed = true;
  std::optional<MinorWitness> witness;
  PositivityBounds bounds;
};

// det|a_{rows_i - cols_j}| with a_k = 0 for k < 0. Throws
// Error{IndexOutOfRange} if a needed index is past the sequence.
Rational toeplitz_minor(std::span<const Rational> seq, const MinorSpec& spec);

// Checks every Toeplitz minor of order <= max_order with row and column
// indices in [0, max_index]. Minors are visited by increasing order, then
// lexicographically on (rows, cols) with each index tuple read left to
// right; the first negative one is reported.
PositivityReport check_p_sequence(std::span<const Rational> seq,
                                  PositivityBounds bounds = {});

struct PPReport {
  // 1, 2 or 3 for gamma > 0, an infinite root family, or an infinite pole
  // family; empty when none applies.
  std::optional<int> condition;
  std::string reason;
  // Bounded check over contained minors (cols_i <= rows_i); a witness here
  // is the first one whose value is not strictly positive.
  PositivityReport contained_minors;

  bool certified() const noexcept { return condition.has_value(); }
};

PPReport check_pp_sequence(const FactoredSeries& f,
                           PositivityBounds bounds = {});

}  // namespace poincare
