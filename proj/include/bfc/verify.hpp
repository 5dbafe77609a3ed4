#pragma once

// Verification sweeps over finite pools. Each sweep returns the witnesses of
// every failed identity; an empty list means the identity held everywhere.

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "bfc/backstable.hpp"
#include "bfc/fock.hpp"
#include "bfc/io.hpp"
#include "bfc/permutation.hpp"
#include "bfc/poly.hpp"
#include "bfc/ribbon.hpp"

namespace bfc {

/// Every w with support inside [lo, hi] and l(w) <= max_length, ordered by
/// length and then canonical form.
inline std::vector<Permutation> permutation_pool(int lo, int hi, int max_length) {
  std::vector<Permutation> out{Permutation{}};
  std::set<Permutation> level{Permutation{}};
  for (int len = 1; len <= max_length; ++len) {
    std::set<Permutation> next;
    for (const Permutation& p : level)
      for (int i = lo; i < hi; ++i)
        if (p(i) < p(i + 1)) next.insert(p * Permutation::simple(i));
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

struct SweepOptions {
  std::optional<int> window_lo;
  std::optional<int> window_hi;
  std::optional<int> max_length;
  int k_lo = -1;
  int k_hi = 2;
  int n_max = 3;
  unsigned jobs = 1;
  Caps caps{};
};

struct SweepResult {
  std::string name;
  std::size_t checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs `check` on every item with `jobs` worker threads; failures are
/// reported in item order whatever the scheduling.
template <class Item, class Check>
SweepResult run_sweep(std::string name, const std::vector<Item>& items, unsigned jobs,
                      Check&& check) {
  std::vector<std::vector<std::string>> per_item(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      try {
        check(items[i], per_item[i]);
      } catch (const std::exception& e) {
        per_item[i].push_back(std::string("exception: ") + e.what());
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(items.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  SweepResult result{std::move(name), items.size(), {}};
  for (auto& failures : per_item)
    result.failures.insert(result.failures.end(), failures.begin(), failures.end());
  return result;
}

namespace detail {

inline std::vector<Permutation> pool_for(const SweepOptions& o, int lo, int hi, int len) {
  return permutation_pool(o.window_lo.value_or(lo), o.window_hi.value_or(hi),
                          o.max_length.value_or(len));
}

inline std::string fmt(const Permutation& w) { return format_permutation(w); }

}  // namespace detail

/// [α_m, α_n] = 0, [α_{-m,k}, α_{-n,k}] = 0, [α_n, α_{-m,k}] = n δ_{mn}.
inline SweepResult verify_heisenberg(const SweepOptions& o = {}) {
  const auto pool = detail::pool_for(o, -2, 4, 5);
  return run_sweep("heisenberg", pool, o.jobs, [&](const Permutation& w, auto& fail) {
    const FockVector v = ket(w);
    for (int m = 1; m <= o.n_max; ++m)
      for (int n = 1; n <= o.n_max; ++n) {
        if (m < n) {
          const FockVector c = alpha_plus(m, alpha_plus(n, v, o.caps), o.caps) -
                               alpha_plus(n, alpha_plus(m, v, o.caps), o.caps);
          if (!c.empty())
            fail.push_back("[a_" + std::to_string(m) + ", a_" + std::to_string(n) + "] != 0 on " +
                           detail::fmt(w));
        }
        for (int k = o.k_lo; k <= o.k_hi; ++k) {
          if (m < n) {
            const FockVector c = alpha_minus(m, k, alpha_minus(n, k, v)) -
                                 alpha_minus(n, k, alpha_minus(m, k, v));
            if (!c.empty())
              fail.push_back("[a_-" + std::to_string(m) + ", a_-" + std::to_string(n) +
                             "] != 0 at k=" + std::to_string(k) + " on " + detail::fmt(w));
          }
          FockVector c = alpha_plus(n, alpha_minus(m, k, v), o.caps) -
                         alpha_minus(m, k, alpha_plus(n, v, o.caps));
          if (m == n) c -= v * Rational(n);
          if (!c.empty())
            fail.push_back("[a_" + std::to_string(n) + ", a_-" + std::to_string(m) +
                           "] != " + (m == n ? std::to_string(n) : "0") +
                           " at k=" + std::to_string(k) + " on " + detail::fmt(w));
        }
      }
  });
}

/// One-row Hamiltonian exponential equals the transfer row.
inline SweepResult verify_exp_transfer(const SweepOptions& o = {}) {
  const auto pool = detail::pool_for(o, -2, 4, 5);
  return run_sweep("exp-transfer", pool, o.jobs, [&](const Permutation& w, auto& fail) {
    if (exp_hamiltonian_apply(w, 1, o.caps) != transfer_row_poly(w))
      fail.push_back("exp(H)|w> != T(x)|w> on " + detail::fmt(w));
  });
}

/// Ψ intertwines the two Heisenberg actions; coproduct agrees with the
/// shift limit; η0 recovers F_w.
inline SweepResult verify_psi(const SweepOptions& o = {}) {
  const auto pool = detail::pool_for(o, -2, 3, 4);
  return run_sweep("psi", pool, o.jobs, [&](const Permutation& w, auto& fail) {
    for (int n = 1; n <= o.n_max; ++n)
      for (int k = o.k_lo; k <= o.k_hi; ++k)
        if (!psi_check(w, n, k, o.caps))
          fail.push_back("psi fails for n=" + std::to_string(n) + " k=" + std::to_string(k) +
                         " on " + detail::fmt(w));
    if (eval_window(backstable(w, o.caps), 3, 3) != backstable_window_oracle(w, 3, 3, o.caps))
      fail.push_back("coproduct != shift limit on window [-3,3] for " + detail::fmt(w));
    if (eta0(backstable(w, o.caps)) != stanley_p(w, o.caps))
      fail.push_back("eta0(backstable) != F_w for " + detail::fmt(w));
  });
}

/// #primitive growths - #primitive strips = r.
inline SweepResult verify_uddu(const SweepOptions& o = {}) {
  const auto pool = detail::pool_for(o, -2, 4, 4);
  return run_sweep("uddu", pool, o.jobs, [&](const Permutation& w, auto& fail) {
    for (int k = o.k_lo; k <= o.k_hi; ++k)
      for (int r = 1; r <= o.n_max; ++r) {
        const int delta = primitive_count_delta(w, k, r, o.caps);
        if (delta != r)
          fail.push_back("primitive delta " + std::to_string(delta) + " != " + std::to_string(r) +
                         " at k=" + std::to_string(k) + " on " + detail::fmt(w));
      }
  });
}

/// Classical correspondence on partitions: five-vertex partition functions
/// are skew Schur polynomials, ribbon operators satisfy the Heisenberg
/// relations and the Murnaghan–Nakayama rule.
inline SweepResult verify_classical(const SweepOptions& o = {}) {
  const int max_size = o.max_length.value_or(6);
  const auto shapes = partitions_up_to(max_size);
  return run_sweep("classical", shapes, o.jobs, [&](const Partition& lambda, auto& fail) {
    for (const Partition& mu : partitions_up_to(lambda.size()))
      if (lambda.contains(mu) &&
          schur_via_fermions(lambda, mu, 3) != skew_schur_ssyt(lambda, mu, 3))
        fail.push_back("vertex model != s_" + format_partition(lambda) + "/" +
                       format_partition(mu));
    const YoungVector v(lambda);
    for (int m = -o.n_max; m <= o.n_max; ++m)
      for (int n = -o.n_max; n <= o.n_max; ++n) {
        if (m == 0 || n == 0 || m >= n) continue;
        YoungVector c = young_alpha(m, young_alpha(n, v)) - young_alpha(n, young_alpha(m, v));
        if (m + n == 0) c -= v * Rational(m);
        if (!c.empty())
          fail.push_back("[a_" + std::to_string(m) + ", a_" + std::to_string(n) +
                         "] wrong on " + format_partition(lambda));
      }
    for (int k = 1; k <= o.n_max && lambda.size() + k <= max_size; ++k) {
      const int nvars = lambda.size() + k;
      const auto expected = schur_expand(
          power_sum(k, variable_range(1, nvars)) * schur_ssyt(lambda, nvars), nvars);
      const YoungVector got = young_alpha(-k, v);
      if (std::map<Partition, Rational>(got.terms().begin(), got.terms().end()) != expected)
        fail.push_back("MN rule p_" + std::to_string(k) + " s_" + format_partition(lambda));
    }
  });
}

inline const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names{"heisenberg", "exp-transfer", "psi", "uddu",
                                              "classical"};
  return names;
}

inline SweepResult run_named_sweep(const std::string& name, const SweepOptions& o) {
  if (name == "heisenberg") return verify_heisenberg(o);
  if (name == "exp-transfer") return verify_exp_transfer(o);
  if (name == "psi") return verify_psi(o);
  if (name == "uddu") return verify_uddu(o);
  if (name == "classical") return verify_classical(o);
  throw ParseError("unknown sweep '" + name + "'");
}

}  // namespace bfc
