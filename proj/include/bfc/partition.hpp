#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/memo.hpp"

namespace bfc {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;

  /// Throws InvalidPartition unless `parts` is weakly decreasing and
  /// positive. Trailing zeros are accepted and dropped.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw InvalidPartition("parts must be positive");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw InvalidPartition("parts must be weakly decreasing");
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  /// Sorts and drops zeros instead of rejecting.
  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// λ_i with λ_i = 0 past the last part (1-based).
  int operator[](std::size_t i) const {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
  }

  /// Multiplicity of the part value `v`.
  int multiplicity(int v) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
  }

  bool contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (std::size_t i = 1; i <= mu.length(); ++i)
      if (mu[i] > (*this)[i]) return false;
    return true;
  }

  Partition conjugate() const {
    std::vector<int> out;
    for (int c = 1; c <= (*this)[1]; ++c) {
      int h = 0;
      while (static_cast<std::size_t>(h) < parts_.size() && parts_[h] >= c) ++h;
      out.push_back(h);
    }
    return Partition(std::move(out));
  }

  /// Multiset union of parts.
  Partition merged(const Partition& other) const {
    std::vector<int> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return from_unsorted(std::move(all));
  }

  /// Removes one copy of the part `v`; the caller checks multiplicity.
  Partition without_part(int v) const {
    std::vector<int> out = parts_;
    out.erase(std::find(out.begin(), out.end(), v));
    return Partition(std::move(out));
  }

  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of n, in reverse lexicographic order ((n) first).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All partitions of size at most n.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto level = partitions_of(m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace bfc

template <>
struct std::hash<bfc::Partition> {
  std::size_t operator()(const bfc::Partition& p) const noexcept {
    std::size_t seed = p.length();
    for (int v : p.parts()) bfc::hash_combine(seed, std::hash<int>{}(v));
    return seed;
  }
};
