#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

namespace poincare {

// A weakly decreasing sequence of positive integers. Stored without trailing
// zeros; parts beyond the length read as 0.
class Partition {
public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  // Accepts trailing zeros and strips them; any other violation throws
  // Error{InvalidPartition}.
  static Partition from_parts(std::span<const int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int weight() const noexcept { return weight_; }
  bool empty() const noexcept { return parts_.empty(); }

  // Part i (0-based), 0 past the end.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a,
                                          const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// All partitions of n, each once, in reverse-lexicographic order:
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
std::vector<Partition> enumerate_partitions(int n);

// Partitions of every weight 0..max_weight, grouped by weight, each group in
// reverse-lexicographic order.
std::vector<Partition> partitions_up_to(int max_weight);

Partition conjugate(const Partition& lambda);

// True iff mu_i <= lambda_i for every i.
bool contains(const Partition& lambda, const Partition& mu);

// True iff lambda_j <= n for all j >= m+1, i.e. lambda lies in the (m,n)
// fat hook.
bool in_hook_region(const Partition& lambda, int m, int n);

// Outer shape minus inner shape; inner must be contained in outer.
class SkewShape {
public:
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.weight() - inner_.weight(); }

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
  Partition outer_;
  Partition inner_;
};

SkewShape conjugate(const SkewShape& shape);

}  // namespace poincare
