#pragma once

// Fermionic Fock spaces span(S_Z) and span(partitions), the Heisenberg
// operators acting on them, transfer matrices and Stanley operators.

#include <functional>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/linear.hpp"
#include "bfc/memo.hpp"
#include "bfc/partition.hpp"
#include "bfc/permutation.hpp"
#include "bfc/poly.hpp"
#include "bfc/ribbon.hpp"

namespace bfc {

struct FockTag {};
struct YoungTag {};
using FockVector = Combination<Permutation, FockTag>;
using YoungVector = Combination<Partition, YoungTag>;

/// (u, d) ↦ coefficient of x^d in <u|T(x)|w>.
struct GradedOperatorImage {
  std::map<std::pair<Permutation, int>, Rational> rows;
  bool operator==(const GradedOperatorImage&) const = default;
};

inline FockVector ket(const Permutation& w) { return FockVector(w); }

/// α_n: strips a weak ribbon of length n from the left of each basis vector.
inline FockVector alpha_plus(int n, const FockVector& v, const Caps& caps = {}) {
  FockVector out;
  for (const auto& [w, c] : v)
    for (const SignedNeighbor& s : left_ribbon_strip(w, n, caps)) out.add(s.target, c * s.sign);
  return out;
}

/// α_{-n,k}: grows a k-strong ribbon of size n.
inline FockVector alpha_minus(int n, int k, const FockVector& v) {
  FockVector out;
  for (const auto& [w, c] : v)
    for (const SignedNeighbor& s : strong_ribbon_grow(w, k, n)) out.add(s.target, c * s.sign);
  return out;
}

// ---------------------------------------------------------------------------
// Classical side: partitions

namespace detail {

/// λ/μ is a non-empty edge-connected skew shape with no 2x2 box; returns
/// the number of rows it occupies, or 0 if it is not a ribbon.
inline int ribbon_height(const Partition& lambda, const Partition& mu) {
  std::set<std::pair<int, int>> cells;
  for (std::size_t r = 1; r <= lambda.length(); ++r)
    for (int c = mu[r] + 1; c <= lambda[r]; ++c) cells.emplace(static_cast<int>(r), c);
  if (cells.empty()) return 0;
  for (auto [r, c] : cells)
    if (cells.contains({r + 1, c}) && cells.contains({r, c + 1}) &&
        cells.contains({r + 1, c + 1}))
      return 0;
  std::set<std::pair<int, int>> seen{*cells.begin()};
  std::vector<std::pair<int, int>> stack{*cells.begin()};
  while (!stack.empty()) {
    auto [r, c] = stack.back();
    stack.pop_back();
    for (auto next : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1},
                      std::pair{r, c - 1}})
      if (cells.contains(next) && seen.insert(next).second) stack.push_back(next);
  }
  if (seen.size() != cells.size()) return 0;
  std::set<int> rows;
  for (auto [r, c] : cells) rows.insert(r);
  return static_cast<int>(rows.size());
}

}  // namespace detail

/// α_m on partitions: m > 0 removes m-ribbons, m < 0 adds |m|-ribbons, each
/// with sign (-1)^(height - 1).
inline YoungVector young_alpha(int m, const YoungVector& v) {
  YoungVector out;
  if (m == 0) return out;
  for (const auto& [lambda, c] : v) {
    const int target = lambda.size() - m;
    for (const Partition& nu : partitions_of(target)) {
      const Partition& big = m > 0 ? lambda : nu;
      const Partition& small = m > 0 ? nu : lambda;
      if (!big.contains(small)) continue;
      const int h = detail::ribbon_height(big, small);
      if (h == 0) continue;
      out.add(nu, h % 2 == 1 ? c : -c);
    }
  }
  return out;
}

/// One horizontal-strip step: all μ ⊆ λ with λ/μ a horizontal strip.
inline std::vector<Partition> horizontal_strips_below(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> parts(lambda.length());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == lambda.length()) {
      out.emplace_back(parts);
      return;
    }
    for (int p = lambda[j + 2]; p <= lambda[j + 1]; ++p) {
      parts[j] = p;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

/// Partition function of the n-row five-vertex model from λ down to μ:
/// equals the skew Schur polynomial s_{λ/μ}(x_1..x_n).
inline MPoly schur_via_fermions(const Partition& lambda, const Partition& mu, int nvars) {
  if (!lambda.contains(mu)) throw NotContained("mu is not contained in lambda");
  std::map<Partition, MPoly> state{{lambda, MPoly(1)}};
  for (int i = 1; i <= nvars; ++i) {
    std::map<Partition, MPoly> next;
    for (const auto& [nu, poly] : state)
      for (const Partition& below : horizontal_strips_below(nu)) {
        if (!below.contains(mu)) continue;
        next[below] += poly * MPoly::variable(i, nu.size() - below.size());
      }
    state = std::move(next);
  }
  auto it = state.find(mu);
  return it == state.end() ? MPoly{} : it->second;
}

// ---------------------------------------------------------------------------
// Transfer matrix and the one-row Hamiltonian

/// v has a strictly decreasing reduced word. The smallest right descent is
/// always the last letter of such a word, so it is peeled greedily.
inline bool is_increasing_perm(const Permutation& v) {
  Permutation p = v;
  int last = std::numeric_limits<int>::min();
  while (!p.is_identity()) {
    const int d = p.right_descents().front();
    if (d <= last) return false;
    last = d;
    p = p * Permutation::simple(d);
  }
  return true;
}

/// <u|T(x)|w> = x^{l(v)} for each factorization w ≐ v * u with v increasing.
inline GradedOperatorImage transfer_row(const Permutation& w) {
  GradedOperatorImage out;
  for (int d = 0; d <= w.length(); ++d)
    for (const Factorization& f : left_factors(w, d))
      if (is_increasing_perm(f.left)) out.rows[{f.right, d}] += 1;
  return out;
}

/// <u|T(x_n) ... T(x_1)|w>.
inline MPoly skew_stanley_via_transfer(const Permutation& w, const Permutation& u, int nvars) {
  std::map<Permutation, MPoly> state{{w, MPoly(1)}};
  for (int i = 1; i <= nvars; ++i) {
    std::map<Permutation, MPoly> next;
    for (const auto& [p, poly] : state) {
      if (p.length() < u.length()) continue;
      for (const auto& [key, c] : transfer_row(p).rows)
        next[key.first] += poly * MPoly::variable(i, key.second) * c;
    }
    state = std::move(next);
  }
  auto it = state.find(u);
  return it == state.end() ? MPoly{} : it->second;
}

/// exp(Σ_{j>0} x_i^j / j · α_j) applied for i = 1..nvars. Each α_j lowers
/// length by j, so the series stops once every term has been annihilated.
inline std::map<Permutation, MPoly> exp_hamiltonian_apply(const Permutation& w, int nvars,
                                                          const Caps& caps = {}) {
  std::map<Permutation, MPoly> state{{w, MPoly(1)}};
  for (int i = 1; i <= nvars; ++i) {
    std::map<Permutation, MPoly> total = state;
    std::map<Permutation, MPoly> term = state;  // H^m / m! applied to state
    for (int m = 1; !term.empty(); ++m) {
      std::map<Permutation, MPoly> next;
      for (const auto& [p, poly] : term)
        for (int j = 1; j <= p.length(); ++j) {
          const MPoly weight = poly * MPoly::variable(i, j) * Rational(1, j * m);
          for (const SignedNeighbor& s : left_ribbon_strip(p, j, caps))
            next[s.target] += weight * Rational(s.sign);
        }
      std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
      for (const auto& [p, poly] : next) total[p] += poly;
      term = std::move(next);
    }
    std::erase_if(total, [](const auto& kv) { return kv.second.is_zero(); });
    state = std::move(total);
  }
  return state;
}

/// The transfer row as a map u ↦ polynomial in x_1.
inline std::map<Permutation, MPoly> transfer_row_poly(const Permutation& w) {
  std::map<Permutation, MPoly> out;
  for (const auto& [key, c] : transfer_row(w).rows)
    out[key.first] += MPoly::variable(1, key.second) * c;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

// ---------------------------------------------------------------------------
// Murnaghan–Nakayama coefficients and Stanley operators

namespace detail {

struct ChiKey {
  Permutation w;
  Partition alpha;
  bool operator==(const ChiKey&) const = default;
};
struct ChiKeyHash {
  std::size_t operator()(const ChiKey& k) const noexcept {
    std::size_t seed = std::hash<Permutation>{}(k.w);
    hash_combine(seed, std::hash<Partition>{}(k.alpha));
    return seed;
  }
};
inline MemoCache<ChiKey, Integer, ChiKeyHash>& chi_cache() {
  static MemoCache<ChiKey, Integer, ChiKeyHash> cache;
  return cache;
}

}  // namespace detail

/// Signed count of factorizations of w into weak ribbons of lengths α.
inline Integer chi(const Permutation& w, const Partition& alpha, const Caps& caps = {}) {
  if (alpha.size() != w.length())
    throw SizeMismatch("|alpha| = " + std::to_string(alpha.size()) +
                       " but l(w) = " + std::to_string(w.length()));
  return detail::chi_cache().get_or_compute({w, alpha}, [&] {
    FockVector v = ket(w);
    for (int part : alpha.parts()) v = alpha_plus(part, v, caps);
    return numerator(v.coeff(Permutation{}));
  });
}

/// α_{-σ,k} = Π α_{-σ_i,k}.
inline FockVector alpha_minus_partition(const Partition& sigma, int k, FockVector v) {
  for (int part : sigma.parts()) v = alpha_minus(part, k, v);
  return v;
}

inline FockVector alpha_plus_partition(const Partition& sigma, FockVector v,
                                       const Caps& caps = {}) {
  for (int part : sigma.parts()) v = alpha_plus(part, v, caps);
  return v;
}

/// F_w^{(k)} = Σ_σ χ_w^σ / z_σ · α_{-σ,k}.
inline FockVector stanley_op_apply(const Permutation& w, int k, const FockVector& v,
                                   const Caps& caps = {}) {
  FockVector out;
  for (const Partition& sigma : partitions_of(w.length())) {
    const Integer c = chi(w, sigma, caps);
    if (c == 0) continue;
    out += alpha_minus_partition(sigma, k, v) * (Rational(c) / Rational(z(sigma)));
  }
  return out;
}

/// F_w^⊥ = Σ_σ χ_w^σ / z_σ · α_σ.
inline FockVector stanley_adjoint_apply(const Permutation& w, const FockVector& v,
                                        const Caps& caps = {}) {
  FockVector out;
  for (const Partition& sigma : partitions_of(w.length())) {
    const Integer c = chi(w, sigma, caps);
    if (c == 0) continue;
    out += alpha_plus_partition(sigma, v, caps) * (Rational(c) / Rational(z(sigma)));
  }
  return out;
}

/// Edelman–Greene coefficients read off F_w^{(k)}|id>.
inline std::map<Partition, Integer> eg_coeffs(const Permutation& w, int k,
                                              const Caps& caps = {}) {
  std::map<Partition, Integer> out;
  for (const auto& [u, c] : stanley_op_apply(w, k, ket(Permutation{}), caps)) {
    if (!is_grassmannian(u, k))
      throw NonGrassmannianSupport("F_w|id> has a non-Grassmannian term");
    if (!is_integral(c) || c < 0)
      throw NonIntegralCoefficient("EG coefficient " + to_string(c) +
                                   " is not a nonnegative integer");
    out[grassmannian_partition(u, k)] = numerator(c);
  }
  return out;
}

}  // namespace bfc
