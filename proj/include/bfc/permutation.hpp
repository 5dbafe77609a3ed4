#pragma once

// Finitely supported permutations of the integers.
//
// A Permutation stores the smallest window [offset, offset + size) outside of
// which it is the identity. Composition follows (p * q)(i) = p(q(i)), so
// right multiplication by s_i swaps the one-line entries at positions i and
// i + 1, and a word a_1 ... a_n multiplies out left to right.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/memo.hpp"
#include "bfc/partition.hpp"

namespace bfc {

/// Enumeration caps. Defaults keep every routine at desk scale.
struct Caps {
  int max_length = 10;
  int max_window = 12;
};

/// Letters i standing for simple reflections s_i.
using Word = std::vector<int>;

class Permutation {
 public:
  /// The identity.
  Permutation() = default;

  /// `images[j]` is the value at position `offset + j`. Throws
  /// InvalidPermutation unless the images permute the window.
  Permutation(int offset, std::vector<int> images)
      : offset_(offset), images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      const long idx = static_cast<long>(v) - offset_;
      if (idx < 0 || idx >= static_cast<long>(images_.size()) || seen[idx])
        throw InvalidPermutation("images do not permute their window");
      seen[idx] = 1;
    }
    normalize();
  }

  static Permutation identity() { return {}; }

  static Permutation simple(int i) { return Permutation(i, {i + 1, i}); }

  /// t_{a,b}: swaps positions a and b.
  static Permutation transposition(int a, int b) {
    if (a == b) return {};
    if (a > b) std::swap(a, b);
    std::vector<int> images(static_cast<std::size_t>(b - a + 1));
    for (int i = a; i <= b; ++i) images[i - a] = i;
    images.front() = b;
    images.back() = a;
    return Permutation(a, std::move(images));
  }

  int offset() const { return offset_; }
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const { return images_.empty(); }

  /// Window bounds [begin, end); empty for the identity.
  int begin_index() const { return offset_; }
  int end_index() const { return offset_ + static_cast<int>(images_.size()); }

  int operator()(int i) const {
    if (i < offset_ || i >= end_index()) return i;
    return images_[static_cast<std::size_t>(i - offset_)];
  }

  Permutation inverse() const {
    std::vector<int> out(images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
      out[static_cast<std::size_t>(images_[j] - offset_)] =
          offset_ + static_cast<int>(j);
    Permutation p;
    p.offset_ = offset_;
    p.images_ = std::move(out);
    return p;
  }

  /// Number of inversions inside the window.
  int length() const {
    int inv = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      for (std::size_t j = i + 1; j < images_.size(); ++j)
        if (images_[i] > images_[j]) ++inv;
    return inv;
  }

  /// Positions i with w(i) > w(i + 1).
  std::vector<int> right_descents() const {
    std::vector<int> out;
    for (std::size_t j = 0; j + 1 < images_.size(); ++j)
      if (images_[j] > images_[j + 1]) out.push_back(offset_ + static_cast<int>(j));
    return out;
  }

  /// Letters i with l(s_i w) < l(w).
  std::vector<int> left_descents() const { return inverse().right_descents(); }

  /// Integers moved by the permutation, ascending.
  std::vector<int> support() const {
    std::vector<int> out;
    for (std::size_t j = 0; j < images_.size(); ++j)
      if (images_[j] != offset_ + static_cast<int>(j))
        out.push_back(offset_ + static_cast<int>(j));
    return out;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.is_identity()) return q;
    if (q.is_identity()) return p;
    const int lo = std::min(p.begin_index(), q.begin_index());
    const int hi = std::max(p.end_index(), q.end_index());
    std::vector<int> images(static_cast<std::size_t>(hi - lo));
    for (int i = lo; i < hi; ++i) images[i - lo] = p(q(i));
    Permutation r;
    r.offset_ = lo;
    r.images_ = std::move(images);
    r.normalize();
    return r;
  }

  Permutation& operator*=(const Permutation& q) { return *this = *this * q; }

  /// One-line values on the explicit range [lo, hi).
  std::vector<int> one_line(int lo, int hi) const {
    std::vector<int> out;
    for (int i = lo; i < hi; ++i) out.push_back((*this)(i));
    return out;
  }

  auto operator<=>(const Permutation&) const = default;
  bool operator==(const Permutation&) const = default;

 private:
  void normalize() {
    std::size_t front = 0;
    while (front < images_.size() &&
           images_[front] == offset_ + static_cast<int>(front))
      ++front;
    if (front == images_.size()) {
      offset_ = 0;
      images_.clear();
      return;
    }
    std::size_t back = images_.size();
    while (images_[back - 1] == offset_ + static_cast<int>(back - 1)) --back;
    images_ = std::vector<int>(images_.begin() + static_cast<long>(front),
                               images_.begin() + static_cast<long>(back));
    offset_ += static_cast<int>(front);
  }

  int offset_ = 0;
  std::vector<int> images_;
};

}  // namespace bfc

template <>
struct std::hash<bfc::Permutation> {
  std::size_t operator()(const bfc::Permutation& p) const noexcept {
    std::size_t seed = std::hash<int>{}(p.offset());
    for (int v : p.images()) bfc::hash_combine(seed, std::hash<int>{}(v));
    return seed;
  }
};

namespace bfc {

inline Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

inline int length(const Permutation& p) { return p.length(); }

inline Permutation product_word(const Word& word) {
  Permutation p;
  for (int a : word) p *= Permutation::simple(a);
  return p;
}

inline bool is_reduced(const Word& word) {
  return product_word(word).length() == static_cast<int>(word.size());
}

/// A reduced word, built by repeatedly stripping the smallest right descent.
inline Word one_reduced_word(Permutation p) {
  Word word;
  while (!p.is_identity()) {
    const int d = p.right_descents().front();
    word.push_back(d);
    p *= Permutation::simple(d);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

namespace detail {

inline MemoCache<Permutation, std::vector<Word>>& reduced_word_cache() {
  static MemoCache<Permutation, std::vector<Word>> cache;
  return cache;
}

inline std::vector<Word> reduced_words_unchecked(const Permutation& p) {
  if (p.is_identity()) return {Word{}};
  return reduced_word_cache().get_or_compute(p, [&] {
    std::vector<Word> out;
    for (int d : p.right_descents()) {
      for (Word w : reduced_words_unchecked(p * Permutation::simple(d))) {
        w.push_back(d);
        out.push_back(std::move(w));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  });
}

}  // namespace detail

/// R(p), sorted lexicographically. Throws BoundExceeded when l(p) is over
/// the cap.
inline std::vector<Word> reduced_words(const Permutation& p, const Caps& caps = {}) {
  if (p.length() > caps.max_length)
    throw BoundExceeded("length " + std::to_string(p.length()) + " exceeds cap " +
                        std::to_string(caps.max_length));
  if (p.end_index() - p.begin_index() > caps.max_window)
    throw BoundExceeded("window width exceeds cap " + std::to_string(caps.max_window));
  return detail::reduced_words_unchecked(p);
}

/// tau^m: result(i + m) = p(i) + m.
inline Permutation tau(const Permutation& p, int m) {
  if (p.is_identity()) return p;
  std::vector<int> images = p.images();
  for (int& v : images) v += m;
  return Permutation(p.offset() + m, std::move(images));
}

struct KCover {
  Permutation target;
  int a;
  int b;
  auto operator<=>(const KCover&) const = default;
  bool operator==(const KCover&) const = default;
};

/// Covers p * t_{a,b} in the k-Bruhat order (a <= k < b, length up by one).
inline std::vector<KCover> kbruhat_covers(const Permutation& p, int k) {
  std::set<int> as{k};
  std::set<int> bs{k + 1};
  if (!p.is_identity()) {
    for (int a = p.begin_index() - 1; a < p.end_index() && a <= k; ++a) as.insert(a);
    for (int b = std::max(p.begin_index(), k + 1); b <= p.end_index(); ++b) bs.insert(b);
  }
  std::vector<KCover> out;
  for (int a : as) {
    for (int b : bs) {
      const int pa = p(a);
      const int pb = p(b);
      if (pa > pb) continue;
      bool cover = true;
      for (int c = a + 1; c < b && cover; ++c) {
        const int pc = p(c);
        if (pa < pc && pc < pb) cover = false;
      }
      if (cover) out.push_back({p * Permutation::transposition(a, b), a, b});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// w ≐ left * right with l(left) = n, for every such pair.
struct Factorization {
  Permutation left;
  Permutation right;
  auto operator<=>(const Factorization&) const = default;
  bool operator==(const Factorization&) const = default;
};

namespace detail {

struct FactorKey {
  Permutation w;
  int n;
  bool operator==(const FactorKey&) const = default;
};

struct FactorKeyHash {
  std::size_t operator()(const FactorKey& k) const noexcept {
    std::size_t seed = std::hash<Permutation>{}(k.w);
    hash_combine(seed, std::hash<int>{}(k.n));
    return seed;
  }
};

inline MemoCache<FactorKey, std::vector<Factorization>, FactorKeyHash>& factor_cache() {
  static MemoCache<FactorKey, std::vector<Factorization>, FactorKeyHash> cache;
  return cache;
}

}  // namespace detail

/// Every length-additive factorization w ≐ v * u with l(v) = n, found by
/// stripping left descents n times and deduplicating by u. Sorted by u.
inline std::vector<Factorization> left_factors(const Permutation& w, int n) {
  if (n < 0 || n > w.length()) return {};
  if (n == 0) return {{Permutation{}, w}};
  return detail::factor_cache().get_or_compute({w, n}, [&] {
    std::set<Permutation> frontier{w};
    for (int step = 0; step < n; ++step) {
      std::set<Permutation> next;
      for (const Permutation& u : frontier)
        for (int d : u.left_descents()) next.insert(Permutation::simple(d) * u);
      frontier = std::move(next);
    }
    std::vector<Factorization> out;
    for (const Permutation& u : frontier) out.push_back({w * u.inverse(), u});
    return out;
  });
}

/// Every length-additive factorization w ≐ u * v, over all lengths.
inline std::vector<Factorization> all_factorizations(const Permutation& w) {
  std::vector<Factorization> out;
  for (int n = 0; n <= w.length(); ++n) {
    auto level = left_factors(w, n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// True iff every descent of u sits at position k.
inline bool is_grassmannian(const Permutation& u, int k) {
  for (int d : u.right_descents())
    if (d != k) return false;
  return true;
}

/// G_k: sorts the values at positions <= k and at positions > k.
inline Permutation grassmannian_sort(const Permutation& p, int k) {
  if (p.is_identity()) return p;
  const int lo = std::min(p.begin_index(), k);
  const int hi = std::max(p.end_index(), k + 1);
  std::vector<int> images = p.one_line(lo, hi);
  const auto split = images.begin() + (k + 1 - lo);
  std::sort(images.begin(), split);
  std::sort(split, images.end());
  return Permutation(lo, std::move(images));
}

/// λ_j = u(k + 1 - j) - (k + 1 - j).
inline Partition grassmannian_partition(const Permutation& u, int k) {
  if (!is_grassmannian(u, k))
    throw NotGrassmannian("permutation has a descent away from position " +
                          std::to_string(k));
  std::vector<int> parts;
  for (int j = 1;; ++j) {
    const int pos = k + 1 - j;
    const int part = u(pos) - pos;
    if (part <= 0) break;
    parts.push_back(part);
  }
  return Partition(std::move(parts));
}

inline Permutation grassmannian_from_partition(const Partition& lambda, int k) {
  if (lambda.empty()) return {};
  const int len = static_cast<int>(lambda.length());
  const int lo = k + 1 - len;
  const int hi = k + lambda[1] + 1;
  std::vector<int> images(static_cast<std::size_t>(hi - lo));
  std::vector<char> used(images.size(), 0);
  for (int j = 1; j <= len; ++j) {
    const int pos = k + 1 - j;
    const int value = lambda[static_cast<std::size_t>(j)] + pos;
    images[pos - lo] = value;
    used[value - lo] = 1;
  }
  int next = lo;
  for (int pos = k + 1; pos < hi; ++pos) {
    while (used[next - lo]) ++next;
    images[pos - lo] = next;
    used[next - lo] = 1;
  }
  return Permutation(lo, std::move(images));
}

/// π_k(w) = λ(G_k(w^{-1})): the row-k partition of the 2D Maya diagram.
inline Partition pi_k(const Permutation& w, int k) {
  return grassmannian_partition(grassmannian_sort(w.inverse(), k), k);
}

}  // namespace bfc
