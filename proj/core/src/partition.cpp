#include "poincare/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "poincare/error.hpp"

namespace poincare {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1 || (i > 0 && parts[i] > parts[i - 1])) {
      throw Error(ErrorKind::InvalidPartition,
                  "parts must be positive and weakly decreasing");
    }
  }
}

void enumerate_into(int remaining, int max_part, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_parts(parts_);
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_parts(std::span<const int> parts) {
  std::vector<int> v(parts.begin(), parts.end());
  while (!v.empty() && v.back() == 0) v.pop_back();
  return Partition(std::move(v));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  os << '(';
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  return os << ')';
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative partition weight");
  }
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto level = enumerate_partitions(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts(lambda.empty() ? 0 : lambda[0], 0);
  for (int row : lambda.parts()) {
    for (int j = 0; j < row; ++j) ++parts[j];
  }
  return Partition(std::move(parts));
}

bool contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

bool in_hook_region(const Partition& lambda, int m, int n) {
  if (m < 0 || n < 0) {
    throw Error(ErrorKind::InvalidArgument, "negative hook parameters");
  }
  return lambda[static_cast<std::size_t>(m)] <= n;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!contains(outer_, inner_)) {
    throw Error(ErrorKind::InvalidShape, "inner shape is not contained in outer");
  }
}

SkewShape conjugate(const SkewShape& shape) {
  return SkewShape(conjugate(shape.outer()), conjugate(shape.inner()));
}

}  // namespace poincare
