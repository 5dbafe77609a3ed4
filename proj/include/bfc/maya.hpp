#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/partition.hpp"
#include "bfc/permutation.hpp"

namespace bfc {

/// A two-coloured line: every position below `begin` is black (occupied),
/// every position at or above `begin + window.size()` is white.
class MayaDiagram {
 public:
  /// Throws MalformedMaya unless
  /// #{white <= center} == #{black > center}.
  MayaDiagram(int begin, std::vector<bool> window, int center)
      : begin_(begin), window_(std::move(window)), center_(center) {
    trim();
    if (count_white_at_most(center_) != count_black_above(center_))
      throw MalformedMaya("center " + std::to_string(center_) +
                          " does not balance the diagram");
  }

  /// Builds the diagram and locates its unique center.
  static MayaDiagram with_balanced_center(int begin, std::vector<bool> window) {
    MayaDiagram m;
    m.begin_ = begin;
    m.window_ = std::move(window);
    m.trim();
    // #{white <= c} - #{black > c} grows by exactly one per step in c.
    int c = m.begin_ - 1;
    while (m.count_white_at_most(c) < m.count_black_above(c)) ++c;
    m.center_ = c;
    return m;
  }

  bool occupied(int i) const {
    if (i < begin_) return true;
    if (i >= end()) return false;
    return window_[static_cast<std::size_t>(i - begin_)];
  }

  int center() const { return center_; }
  int begin() const { return begin_; }
  int end() const { return begin_ + static_cast<int>(window_.size()); }

  /// Black positions inside [begin, end), ascending.
  std::vector<int> black_in_window() const {
    std::vector<int> out;
    for (int i = begin_; i < end(); ++i)
      if (occupied(i)) out.push_back(i);
    return out;
  }

  bool operator==(const MayaDiagram&) const = default;

 private:
  MayaDiagram() = default;

  void trim() {
    std::size_t front = 0;
    while (front < window_.size() && window_[front]) ++front;
    std::size_t back = window_.size();
    while (back > front && !window_[back - 1]) --back;
    window_ = std::vector<bool>(window_.begin() + static_cast<long>(front),
                                window_.begin() + static_cast<long>(back));
    begin_ += static_cast<int>(front);
  }

  int count_white_at_most(int c) const {
    int n = 0;
    for (int i = begin_; i <= c && i < end(); ++i)
      if (!occupied(i)) ++n;
    return n;
  }

  int count_black_above(int c) const {
    int n = 0;
    for (int i = std::max(c + 1, begin_); i < end(); ++i)
      if (occupied(i)) ++n;
    return n;
  }

  int begin_ = 0;
  std::vector<bool> window_;
  int center_ = 0;
};

/// Black nodes at λ_j - j + k + 1 for j >= 1; the center is k.
inline MayaDiagram maya_from_partition(const Partition& lambda, int k) {
  const int len = static_cast<int>(lambda.length());
  const int begin = k - len + 1;
  const int end = k + lambda[1] + 1;
  std::vector<bool> window(static_cast<std::size_t>(end - begin), false);
  for (int j = 1; j <= len; ++j)
    window[static_cast<std::size_t>(lambda[static_cast<std::size_t>(j)] - j + k + 1 - begin)] =
        true;
  return MayaDiagram(begin, std::move(window), k);
}

inline std::pair<Partition, int> partition_from_maya(const MayaDiagram& f) {
  std::vector<int> black = f.black_in_window();
  std::vector<int> parts;
  // The j-th black node from the right sits at λ_j - j + center + 1.
  // Black nodes left of the window all give λ_j = 0 for a balanced diagram.
  int j = 1;
  for (auto it = black.rbegin(); it != black.rend(); ++it, ++j)
    parts.push_back(*it + j - 1 - f.center());
  return {Partition::from_unsorted(std::move(parts)), f.center()};
}

/// Labels black nodes ..., c-1, c and white nodes c+1, c+2, ... from left to
/// right (c the center); the labels read as a one-line give the inverse of
/// the c-Grassmannian permutation of the diagram.
inline Permutation maya_labels(const MayaDiagram& f) {
  const int lo = std::min(f.begin(), f.center() + 1);
  const int hi = std::max(f.end(), f.center() + 1);
  int black_total = 0;
  for (int i = lo; i < hi; ++i)
    if (f.occupied(i)) ++black_total;
  // Black nodes in [lo, hi) take labels c - black_total + 1, ..., c.
  int next_black = f.center() - black_total + 1;
  int next_white = f.center() + 1;
  std::vector<int> images;
  for (int i = lo; i < hi; ++i)
    images.push_back(f.occupied(i) ? next_black++ : next_white++);
  return Permutation(lo, std::move(images));
}

}  // namespace bfc
