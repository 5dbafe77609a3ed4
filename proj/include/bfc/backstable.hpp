#pragma once

// Schubert and Stanley polynomials, back-stable Schubert polynomials in
// Λ^{≤0} ⊗ Q[x_Z], and the action of the Heisenberg algebra on that ring.

#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/fock.hpp"
#include "bfc/linear.hpp"
#include "bfc/memo.hpp"
#include "bfc/partition.hpp"
#include "bfc/permutation.hpp"
#include "bfc/poly.hpp"

namespace bfc {

namespace detail {

// Σ over index sequences i_1 <= ... <= i_l compatible with the word a
// (strict where a_j < a_{j+1}), bounded by i_j <= a_j when `bounded`, and by
// nvars otherwise.
inline void add_compatible_sequences(const Word& a, bool bounded, int nvars, MPoly& out) {
  const std::size_t n = a.size();
  std::map<int, int> exps;
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int prev) {
    if (j == n) {
      out.add_term(Monomial(exps), 1);
      return;
    }
    const int low = j == 0 ? 1 : (a[j - 1] < a[j] ? prev + 1 : prev);
    const int high = bounded ? a[j] : nvars;
    for (int i = low; i <= high; ++i) {
      ++exps[i];
      rec(j + 1, i);
      if (--exps[i] == 0) exps.erase(i);
    }
  };
  rec(0, 1);
}

struct TruncKey {
  Permutation w;
  int nvars;
  bool operator==(const TruncKey&) const = default;
};
struct TruncKeyHash {
  std::size_t operator()(const TruncKey& k) const noexcept {
    std::size_t seed = std::hash<Permutation>{}(k.w);
    hash_combine(seed, std::hash<int>{}(k.nvars));
    return seed;
  }
};

inline MemoCache<Permutation, MPoly>& schubert_cache() {
  static MemoCache<Permutation, MPoly> cache;
  return cache;
}
inline MemoCache<TruncKey, MPoly, TruncKeyHash>& stanley_trunc_cache() {
  static MemoCache<TruncKey, MPoly, TruncKeyHash> cache;
  return cache;
}

}  // namespace detail

/// 𝔖_w for w supported on positive integers.
inline MPoly schubert_poly(const Permutation& w, const Caps& caps = {}) {
  if (!w.is_identity() && w.begin_index() <= 0)
    throw UnsupportedWindow("Schubert polynomial needs support in the positive integers");
  return detail::schubert_cache().get_or_compute(w, [&] {
    MPoly out;
    for (const Word& a : reduced_words(w, caps)) detail::add_compatible_sequences(a, true, 0, out);
    return out;
  });
}

/// F_w(x_1..x_nvars).
inline MPoly stanley_trunc(const Permutation& w, int nvars, const Caps& caps = {}) {
  return detail::stanley_trunc_cache().get_or_compute({w, nvars}, [&] {
    MPoly out;
    for (const Word& a : reduced_words(w, caps))
      detail::add_compatible_sequences(a, false, nvars, out);
    return out;
  });
}

/// F_w = Σ_α χ_w^α / z_α p_α.
inline SymP stanley_p(const Permutation& w, const Caps& caps = {}) {
  SymP out;
  for (const Partition& alpha : partitions_of(w.length())) {
    const Integer c = chi(w, alpha, caps);
    if (c != 0) out.add(alpha, Rational(c) / Rational(z(alpha)));
  }
  return out;
}

/// p_m F_w = Σ_{u} (-1)^spin(u/w) F_u over k-strong ribbons u/w of size m,
/// compared in nvars variables.
inline bool dual_mn_check(const Permutation& w, int m, int k, int nvars, const Caps& caps = {}) {
  const MPoly lhs = power_sum(m, variable_range(1, nvars)) * stanley_trunc(w, nvars, caps);
  MPoly rhs;
  for (const SignedNeighbor& s : strong_ribbon_grow(w, k, m))
    rhs += stanley_trunc(s.target, nvars, caps) * Rational(s.sign);
  return lhs == rhs;
}

// ---------------------------------------------------------------------------
// S_{≠0}

inline bool in_s_neq0(const Permutation& v) {
  for (int i = v.begin_index(); i < v.end_index(); ++i)
    if ((v(i) <= 0) != (i <= 0)) return false;
  return true;
}

/// v = v_minus * v_plus with v_minus moving only i <= 0, v_plus only i >= 1.
inline std::pair<Permutation, Permutation> split_s_neq0(const Permutation& v) {
  if (!in_s_neq0(v)) throw NotInSNeq0("permutation uses s_0");
  if (v.is_identity()) return {Permutation{}, Permutation{}};
  std::vector<int> minus;
  std::vector<int> plus;
  for (int i = v.begin_index(); i < v.end_index(); ++i) (i <= 0 ? minus : plus).push_back(v(i));
  const Permutation v_minus = minus.empty() ? Permutation{} : Permutation(v.begin_index(), minus);
  const Permutation v_plus =
      plus.empty() ? Permutation{} : Permutation(std::max(v.begin_index(), 1), plus);
  return {v_minus, v_plus};
}

/// Conjugation by i ↦ 1 - i.
inline Permutation mirror(const Permutation& v) {
  if (v.is_identity()) return v;
  const int lo = 1 - (v.end_index() - 1);
  std::vector<int> images;
  for (int j = lo; j <= 1 - v.begin_index(); ++j) images.push_back(1 - v(1 - j));
  return Permutation(lo, images);
}

/// 𝔖_{v_plus} · (-1)^{l(v_minus)} 𝔖_{mirror(v_minus)}(x_j ↦ x_{1-j}).
inline MPoly schubert_neq0(const Permutation& v, const Caps& caps = {}) {
  const auto [v_minus, v_plus] = split_s_neq0(v);
  MPoly negative = schubert_poly(mirror(v_minus), caps).relabeled([](int j) { return 1 - j; });
  if (v_minus.length() % 2 == 1) negative = -negative;
  return schubert_poly(v_plus, caps) * negative;
}

// ---------------------------------------------------------------------------
// Back-stable Schubert polynomials

/// Σ c · p_α^{≤0} ⊗ x^m.
struct BSymTag {};
using BSymKey = std::pair<Partition, Monomial>;
using BSym = Combination<BSymKey, BSymTag>;

inline BSym bsym_one() { return BSym(BSymKey{}); }

inline BSym operator*(const BSym& a, const BSym& b) {
  BSym out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b)
      out.add({ka.first.merged(kb.first), ka.second * kb.second}, ca * cb);
  return out;
}

namespace detail {

inline MemoCache<Permutation, BSym>& backstable_cache() {
  static MemoCache<Permutation, BSym> cache;
  return cache;
}

}  // namespace detail

/// S̄_w = Σ F_u^{≤0} 𝔖_v over w ≐ u * v with v ∈ S_{≠0}.
inline BSym backstable(const Permutation& w, const Caps& caps = {}) {
  return detail::backstable_cache().get_or_compute(w, [&] {
    BSym out;
    for (const Factorization& f : all_factorizations(w)) {
      if (!in_s_neq0(f.right)) continue;
      const SymP sym = stanley_p(f.left, caps);
      const MPoly poly = schubert_neq0(f.right, caps);
      for (const auto& [alpha, c] : sym)
        for (const auto& [m, d] : poly.terms()) out.add({alpha, m}, c * d);
    }
    return out;
  });
}

inline BSym backstable(const FockVector& v, const Caps& caps = {}) {
  BSym out;
  for (const auto& [w, c] : v) out += backstable(w, caps) * c;
  return out;
}

/// Sets every variable outside [-N, M] to zero.
inline MPoly eval_window(const BSym& f, int N, int M) {
  const std::vector<int> negative = variable_range(-N, 0);
  MPoly out;
  for (const auto& [key, c] : f) {
    if (!key.second.supported_in(-N, M)) continue;
    out += p_expansion_to_poly(SymP(key.first), negative) * MPoly(key.second, c);
  }
  return out;
}

/// Window [-N, M] of the limit of 𝔖_{τ^m w}(x_{1-m}, x_{2-m}, ...) as m grows.
inline MPoly backstable_window_oracle(const Permutation& w, int N, int M, const Caps& caps = {}) {
  std::optional<MPoly> previous;
  const int cutoff = N + w.length() + 4;
  for (int m = N + 1; m <= cutoff; ++m) {
    const Permutation shifted = tau(w, m);
    if (!shifted.is_identity() && shifted.begin_index() <= 0) {
      previous.reset();
      continue;
    }
    MPoly current = schubert_poly(shifted, caps)
                        .relabeled([m](int j) { return j - m; })
                        .restrict_to_window(-N, M);
    if (previous && *previous == current) return current;
    previous = std::move(current);
  }
  throw NoConvergence("shift limit did not stabilise by m = " + std::to_string(cutoff));
}

/// Keeps the purely symmetric part.
inline SymP eta0(const BSym& f) {
  SymP out;
  for (const auto& [key, c] : f)
    if (key.second.is_one()) out.add(key.first, c);
  return out;
}

/// n ∂/∂p_n^{≤0}.
inline BSym b_alpha_plus(int n, const BSym& f) {
  BSym out;
  for (const auto& [key, c] : f) {
    const int copies = key.first.multiplicity(n);
    if (copies > 0) out.add({key.first.without_part(n), key.second}, c * n * copies);
  }
  return out;
}

/// Multiplication by p_n^{≤k}, expanded over p_n^{≤0} and the x_i.
inline BSym b_alpha_minus(int n, int k, const BSym& f) {
  BSym out;
  for (const auto& [key, c] : f) {
    out.add({key.first.merged(Partition{n}), key.second}, c);
    for (int i = 1; i <= k; ++i) out.add({key.first, key.second * Monomial::variable(i, n)}, c);
    for (int i = k + 1; i <= 0; ++i)
      out.add({key.first, key.second * Monomial::variable(i, n)}, -c);
  }
  return out;
}

/// Ψ intertwines α_n and α_{-n,k} on |w>.
inline bool psi_check(const Permutation& w, int n, int k, const Caps& caps = {}) {
  const BSym image = backstable(w, caps);
  if (backstable(alpha_plus(n, ket(w), caps), caps) != b_alpha_plus(n, image)) return false;
  return backstable(alpha_minus(n, k, ket(w)), caps) == b_alpha_minus(n, k, image);
}

}  // namespace bfc
