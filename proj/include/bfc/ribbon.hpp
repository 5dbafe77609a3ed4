#pragma once

// Weak ribbons (stripped by the annihilation operators) and k-strong ribbons
// (grown by the creation operators), with their spins.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/memo.hpp"
#include "bfc/permutation.hpp"

namespace bfc {

struct SignedNeighbor {
  Permutation target;
  int sign;  // (-1)^spin
  auto operator<=>(const SignedNeighbor&) const = default;
  bool operator==(const SignedNeighbor&) const = default;
};

/// #{k : some occurrence of k precedes some occurrence of k + 1}.
inline int word_spin(const Word& word) {
  std::set<int> letters(word.begin(), word.end());
  int spin = 0;
  for (int k : letters) {
    if (!letters.contains(k + 1)) continue;
    const auto first_k = std::find(word.begin(), word.end(), k);
    const auto last_k1 = std::find(word.rbegin(), word.rend(), k + 1).base() - 1;
    if (first_k < last_k1) ++spin;
  }
  return spin;
}

namespace detail {

// Occurrence of a, a-1, a+1, a (2132) or a, a+1, a-1, a (2312). Letters
// further apart commute, so only adjacent values can form the pattern.
inline bool contains_2132_or_2312(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = i + 3; l < n; ++l) {
      if (w[l] != w[i]) continue;
      bool seen_lower = false;
      bool seen_upper = false;
      for (std::size_t j = i + 1; j < l; ++j) {
        if (w[j] == w[i] + 1 && seen_lower) return true;  // 2132
        if (w[j] == w[i] - 1 && seen_upper) return true;  // 2312
        if (w[j] == w[i] - 1) seen_lower = true;
        if (w[j] == w[i] + 1) seen_upper = true;
      }
    }
  return false;
}

}  // namespace detail

/// Interval letter support and avoidance of 2132 and 2312. Throws NotReduced.
inline bool is_weak_ribbon_word(const Word& word) {
  if (!is_reduced(word)) throw NotReduced("word is not reduced");
  if (word.empty()) return true;
  std::set<int> letters(word.begin(), word.end());
  if (*letters.rbegin() - *letters.begin() + 1 != static_cast<int>(letters.size()))
    return false;
  return !detail::contains_2132_or_2312(word);
}

namespace detail {

inline MemoCache<Permutation, std::optional<int>>& weak_ribbon_cache() {
  static MemoCache<Permutation, std::optional<int>> cache;
  return cache;
}

}  // namespace detail

/// Spin of v when v is a weak ribbon; decided on a single reduced word.
inline std::optional<int> is_weak_ribbon(const Permutation& v, const Caps& caps = {}) {
  if (v.length() > caps.max_length)
    throw BoundExceeded("length " + std::to_string(v.length()) + " exceeds cap " +
                        std::to_string(caps.max_length));
  return detail::weak_ribbon_cache().get_or_compute(v, [&]() -> std::optional<int> {
    const Word word = one_reduced_word(v);
    if (!is_weak_ribbon_word(word)) return std::nullopt;
    return word_spin(word);
  });
}

/// v admits a reduced word a_1 > ... > a_r < b_1 <= ... <= b_l with interval
/// support. Exhaustive over R(v).
inline bool is_hook_permutation(const Permutation& v, const Caps& caps = {}) {
  for (const Word& w : reduced_words(v, caps)) {
    if (w.empty()) return true;
    std::set<int> letters(w.begin(), w.end());
    if (*letters.rbegin() - *letters.begin() + 1 != static_cast<int>(letters.size()))
      return false;
    std::size_t i = 1;
    while (i < w.size() && w[i] < w[i - 1]) ++i;
    bool ok = true;
    for (; i < w.size() && ok; ++i)
      if (w[i] < w[i - 1]) ok = false;
    if (ok) return true;
  }
  return false;
}

/// All u with w ≐ v * u, l(v) = n and v a weak ribbon, signed by (-1)^spin(v).
inline std::vector<SignedNeighbor> left_ribbon_strip(const Permutation& w, int n,
                                                     const Caps& caps = {}) {
  std::vector<SignedNeighbor> out;
  for (const Factorization& f : left_factors(w, n)) {
    if (auto spin = is_weak_ribbon(f.left, caps))
      out.push_back({f.right, (*spin % 2 == 0) ? 1 : -1});
  }
  return out;
}

/// Mirror image: all u with w ≐ u * v, l(v) = n and v a weak ribbon. Not the
/// strip used by the annihilation operators (see alpha_plus).
inline std::vector<SignedNeighbor> right_ribbon_strip(const Permutation& w, int n,
                                                      const Caps& caps = {}) {
  std::vector<SignedNeighbor> out;
  for (const Factorization& f : left_factors(w.inverse(), n)) {
    if (auto spin = is_weak_ribbon(f.left.inverse(), caps))
      out.push_back({f.right.inverse(), (*spin % 2 == 0) ? 1 : -1});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

struct GrowKey {
  Permutation w;
  int k;
  int n;
  bool operator==(const GrowKey&) const = default;
};

struct GrowKeyHash {
  std::size_t operator()(const GrowKey& key) const noexcept {
    std::size_t seed = std::hash<Permutation>{}(key.w);
    hash_combine(seed, std::hash<int>{}(key.k));
    hash_combine(seed, std::hash<int>{}(key.n));
    return seed;
  }
};

inline MemoCache<GrowKey, std::vector<SignedNeighbor>, GrowKeyHash>& grow_cache() {
  static MemoCache<GrowKey, std::vector<SignedNeighbor>, GrowKeyHash> cache;
  return cache;
}

inline bool is_single_cycle(const Permutation& c, std::size_t expected_size) {
  const std::vector<int> moved = c.support();
  if (moved.size() != expected_size || moved.empty()) return false;
  std::size_t steps = 1;
  for (int x = c(moved.front()); x != moved.front(); x = c(x)) ++steps;
  return steps == moved.size();
}

}  // namespace detail

/// Spin of the strong ribbon u / w: #{i <= k moved by w^{-1} u} - 1.
inline int strong_spin(const Permutation& w, const Permutation& u, int k) {
  const std::vector<int> moved = (w.inverse() * u).support();
  return static_cast<int>(std::count_if(moved.begin(), moved.end(),
                                        [k](int i) { return i <= k; })) -
         1;
}

/// All u reached from w by n k-Bruhat covers with w^{-1} u an (n+1)-cycle,
/// deduplicated by u and signed by (-1)^spin(u / w).
inline std::vector<SignedNeighbor> strong_ribbon_grow(const Permutation& w, int k, int n) {
  if (n <= 0) return {};
  return detail::grow_cache().get_or_compute({w, k, n}, [&] {
    std::set<Permutation> frontier{w};
    for (int step = 0; step < n; ++step) {
      std::set<Permutation> next;
      for (const Permutation& p : frontier)
        for (const KCover& c : kbruhat_covers(p, k)) next.insert(c.target);
      frontier = std::move(next);
    }
    const Permutation w_inv = w.inverse();
    std::vector<SignedNeighbor> out;
    for (const Permutation& u : frontier) {
      if (!detail::is_single_cycle(w_inv * u, static_cast<std::size_t>(n) + 1)) continue;
      out.push_back({u, strong_spin(w, u, k) % 2 == 0 ? 1 : -1});
    }
    return out;
  });
}

/// u / w is a strong ribbon of some size (growth from w) and u w^{-1} is a
/// weak ribbon. Throws NotStrongRibbon if u is not a strong growth of w.
inline bool is_primitive(const Permutation& w, const Permutation& u, int k,
                         const Caps& caps = {}) {
  const int r = u.length() - w.length();
  const auto grown = r > 0 ? strong_ribbon_grow(w, k, r) : std::vector<SignedNeighbor>{};
  const bool found = std::any_of(grown.begin(), grown.end(),
                                 [&](const SignedNeighbor& s) { return s.target == u; });
  if (!found) throw NotStrongRibbon("u is not a k-strong ribbon growth of w");
  const Permutation quotient = u * w.inverse();
  return quotient.length() == r && is_weak_ribbon(quotient, caps).has_value();
}

/// #(primitive growths of size r above w) - #(primitive strips of size r
/// below w).
inline int primitive_count_delta(const Permutation& w, int k, int r, const Caps& caps = {}) {
  int growths = 0;
  for (const SignedNeighbor& s : strong_ribbon_grow(w, k, r))
    if (is_primitive(w, s.target, k, caps)) ++growths;
  // A primitive strip w = v * u has v = w u^{-1} a weak ribbon of length r.
  int strips = 0;
  for (const Factorization& f : left_factors(w, r)) {
    if (!is_weak_ribbon(f.left, caps)) continue;
    const auto grown = strong_ribbon_grow(f.right, k, r);
    if (std::any_of(grown.begin(), grown.end(),
                    [&](const SignedNeighbor& s) { return s.target == w; }))
      ++strips;
  }
  return growths - strips;
}

}  // namespace bfc
