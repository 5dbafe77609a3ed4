#pragma once

// Exact sparse polynomials in integer-indexed variables and symmetric
// functions in the power-sum basis.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bfc/errors.hpp"
#include "bfc/linear.hpp"
#include "bfc/memo.hpp"
#include "bfc/partition.hpp"
#include "bfc/rational.hpp"

namespace bfc {

/// Product of powers x_i^e, e > 0, kept sorted by variable index.
class Monomial {
 public:
  Monomial() = default;

  explicit Monomial(const std::map<int, int>& exponents) {
    for (auto [var, e] : exponents) {
      if (e < 0) throw InvalidPartition("negative exponent");
      if (e > 0) factors_.emplace_back(var, e);
    }
  }

  static Monomial variable(int var, int exponent = 1) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(var, exponent);
    return m;
  }

  const std::vector<std::pair<int, int>>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (auto [v, e] : factors_) d += e;
    return d;
  }

  int exponent(int var) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), std::pair{var, 0});
    return it != factors_.end() && it->first == var ? it->second : 0;
  }

  Monomial with_exponent(int var, int e) const {
    std::map<int, int> exps(factors_.begin(), factors_.end());
    exps[var] = e;
    return Monomial(exps);
  }

  template <class Relabel>
  Monomial relabeled(Relabel&& relabel) const {
    std::map<int, int> exps;
    for (auto [v, e] : factors_) exps[relabel(v)] += e;
    return Monomial(exps);
  }

  bool touches(const std::set<int>& vars) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const auto& f) { return vars.contains(f.first); });
  }

  /// All variables in [lo, hi].
  bool supported_in(int lo, int hi) const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [&](const auto& f) { return lo <= f.first && f.first <= hi; });
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return out;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::pair<int, int>> factors_;
};

class MPoly {
 public:
  MPoly() = default;
  MPoly(int c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(const Rational& c) { add_term(Monomial{}, c); }  // NOLINT
  MPoly(const Monomial& m, const Rational& c = 1) { add_term(m, c); }

  static MPoly variable(int var, int exponent = 1) {
    return MPoly(Monomial::variable(var, exponent));
  }

  void add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  bool is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
  }

  std::set<int> variables() const {
    std::set<int> out;
    for (const auto& [m, c] : terms_)
      for (auto [v, e] : m.factors()) out.insert(v);
    return out;
  }

  MPoly& operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  MPoly& operator*=(const Rational& s) {
    if (s == 0) terms_.clear();
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  friend MPoly operator*(const Rational& s, MPoly a) { return a *= s; }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly pow(int e) const {
    MPoly out(1);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
  }

  /// Kills every monomial that involves one of `vars`.
  MPoly substitute_zero(const std::set<int>& vars) const {
    MPoly out;
    for (const auto& [m, c] : terms_)
      if (!m.touches(vars)) out.add_term(m, c);
    return out;
  }

  /// Keeps monomials whose variables all lie in [lo, hi].
  MPoly restrict_to_window(int lo, int hi) const {
    MPoly out;
    for (const auto& [m, c] : terms_)
      if (m.supported_in(lo, hi)) out.add_term(m, c);
    return out;
  }

  MPoly truncate_degree(int max_degree) const {
    MPoly out;
    for (const auto& [m, c] : terms_)
      if (m.degree() <= max_degree) out.add_term(m, c);
    return out;
  }

  template <class Relabel>
  MPoly relabeled(Relabel&& relabel) const {
    MPoly out;
    for (const auto& [m, c] : terms_) out.add_term(m.relabeled(relabel), c);
    return out;
  }

  MPoly swap_variables(int i, int j) const {
    return relabeled([i, j](int v) { return v == i ? j : v == j ? i : v; });
  }

  bool operator==(const MPoly&) const = default;

 private:
  std::map<Monomial, Rational> terms_;
};

inline Rational coeff(const MPoly& f, const Monomial& m) { return f.coeff(m); }

/// Symmetric function in the power-sum basis: p_α ↦ coefficient.
struct PowerSumTag {};
using SymP = Combination<Partition, PowerSumTag>;

inline SymP operator*(const SymP& a, const SymP& b) {
  SymP out;
  for (const auto& [alpha, ca] : a)
    for (const auto& [beta, cb] : b) out.add(alpha.merged(beta), ca * cb);
  return out;
}

inline SymP power_sum_p(int n) { return SymP(Partition{n}); }

/// z_α = Π_i i^{m_i} m_i!.
inline Integer z(const Partition& alpha) {
  Integer out = 1;
  for (int v : std::set<int>(alpha.parts().begin(), alpha.parts().end())) {
    const int m = alpha.multiplicity(v);
    for (int j = 1; j <= m; ++j) out *= Integer(v) * j;
  }
  return out;
}

/// h_m = Σ_{α ⊢ m} p_α / z_α.
inline SymP h_to_p(int m) {
  SymP out;
  for (const Partition& alpha : partitions_of(m)) out.add(alpha, Rational(1) / Rational(z(alpha)));
  return out;
}

inline MPoly power_sum(int n, const std::vector<int>& vars) {
  MPoly out;
  for (int v : vars) out.add_term(Monomial::variable(v, n), 1);
  return out;
}

inline std::vector<int> variable_range(int first, int last) {
  std::vector<int> out;
  for (int i = first; i <= last; ++i) out.push_back(i);
  return out;
}

/// p_n ↦ Σ_{i ∈ vars} x_i^n.
inline MPoly p_expansion_to_poly(const SymP& f, const std::vector<int>& vars) {
  std::map<int, MPoly> powers;
  MPoly out;
  for (const auto& [alpha, c] : f) {
    MPoly term(c);
    for (int part : alpha.parts()) {
      auto it = powers.find(part);
      if (it == powers.end()) it = powers.emplace(part, power_sum(part, vars)).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

/// Σ_T x^wt(T) over SSYT of the skew shape λ/μ with entries in 1..nvars.
inline MPoly skew_schur_ssyt(const Partition& lambda, const Partition& mu, int nvars) {
  if (!lambda.contains(mu)) throw NotContained("mu is not contained in lambda");
  std::vector<std::pair<int, int>> cells;  // (row, col), 1-based
  for (std::size_t r = 1; r <= lambda.length(); ++r)
    for (int c = mu[r] + 1; c <= lambda[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  std::map<std::pair<int, int>, int> filling;
  std::map<int, int> weight;
  MPoly out;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      out.add_term(Monomial(weight), 1);
      return;
    }
    auto [r, c] = cells[idx];
    int low = 1;
    if (auto it = filling.find({r, c - 1}); it != filling.end()) low = std::max(low, it->second);
    if (auto it = filling.find({r - 1, c}); it != filling.end())
      low = std::max(low, it->second + 1);
    for (int v = low; v <= nvars; ++v) {
      filling[{r, c}] = v;
      ++weight[v];
      rec(idx + 1);
      --weight[v];
    }
    filling.erase({r, c});
  };
  rec(0);
  return out;
}

namespace detail {

struct SchurKey {
  Partition lambda;
  int nvars;
  bool operator==(const SchurKey&) const = default;
};
struct SchurKeyHash {
  std::size_t operator()(const SchurKey& k) const noexcept {
    std::size_t seed = std::hash<Partition>{}(k.lambda);
    hash_combine(seed, std::hash<int>{}(k.nvars));
    return seed;
  }
};
inline MemoCache<SchurKey, MPoly, SchurKeyHash>& schur_cache() {
  static MemoCache<SchurKey, MPoly, SchurKeyHash> cache;
  return cache;
}

}  // namespace detail

/// s_λ(x_1..x_nvars) by SSYT enumeration; zero when λ has more rows than
/// variables.
inline MPoly schur_ssyt(const Partition& lambda, int nvars) {
  return detail::schur_cache().get_or_compute(
      {lambda, nvars}, [&] { return skew_schur_ssyt(lambda, Partition{}, nvars); });
}

/// h_m(x_1..x_nvars) as the sum of all monomials of degree m.
inline MPoly complete_homogeneous(int m, int nvars) {
  if (m < 0) return {};
  MPoly out;
  std::map<int, int> exps;
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var > nvars) {
      if (remaining == 0) out.add_term(Monomial(exps), 1);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      exps[var] = e;
      rec(var + 1, remaining - e);
    }
    exps.erase(var);
  };
  rec(1, m);
  return out;
}

namespace detail {

inline MPoly determinant(const std::vector<std::vector<MPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  if (n == 1) return m[0][0];
  MPoly out;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<MPoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<MPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    MPoly term = m[0][col] * determinant(minor);
    if (col % 2 == 1) term = -term;
    out += term;
  }
  return out;
}

}  // namespace detail

/// det(h_{λ_i - i + j}) in nvars variables.
inline MPoly jacobi_trudi(const Partition& lambda, int nvars) {
  const std::size_t n = lambda.length();
  std::map<int, MPoly> h;
  auto h_of = [&](int m) -> const MPoly& {
    auto it = h.find(m);
    if (it == h.end()) it = h.emplace(m, complete_homogeneous(m, nvars)).first;
    return it->second;
  };
  std::vector<std::vector<MPoly>> matrix(n, std::vector<MPoly>(n));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      matrix[i - 1][j - 1] = h_of(lambda[i] - static_cast<int>(i) + static_cast<int>(j));
  return detail::determinant(matrix);
}

/// Invariant under every adjacent swap of x_1..x_nvars, with no other
/// variables present.
inline bool is_symmetric(const MPoly& f, int nvars) {
  for (int v : f.variables())
    if (v < 1 || v > nvars) return false;
  for (int i = 1; i < nvars; ++i)
    if (f.swap_variables(i, i + 1) != f) return false;
  return true;
}

/// Coefficients c_λ with f = Σ c_λ s_λ(x_1..x_nvars), by subtracting the
/// Schur polynomial of the graded-lex leading exponent until nothing is left.
inline std::map<Partition, Rational> schur_expand(MPoly f, int nvars) {
  if (!is_symmetric(f, nvars)) throw NotSymmetric("polynomial is not symmetric");
  std::map<Partition, Rational> out;
  while (!f.is_zero()) {
    const Monomial* lead = nullptr;
    std::vector<int> lead_exps;
    int lead_degree = -1;
    for (const auto& [m, c] : f.terms()) {
      std::vector<int> exps;
      for (int v = 1; v <= nvars; ++v) exps.push_back(m.exponent(v));
      const int d = m.degree();
      if (lead == nullptr || d > lead_degree || (d == lead_degree && exps > lead_exps)) {
        lead = &m;
        lead_exps = std::move(exps);
        lead_degree = d;
      }
    }
    if (!std::is_sorted(lead_exps.begin(), lead_exps.end(), std::greater<>()))
      throw NotSymmetric("leading exponent is not a partition");
    const Rational c = f.coeff(*lead);
    const Partition lambda(lead_exps);
    out[lambda] += c;
    f -= c * schur_ssyt(lambda, nvars);
  }
  return out;
}

/// ∂_i f = (f - s_i f) / (x_i - x_{i+1}), computed termwise.
inline MPoly divided_difference(const MPoly& f, int i) {
  MPoly out;
  for (const auto& [m, c] : f.terms()) {
    const int a = m.exponent(i);
    const int b = m.exponent(i + 1);
    if (a == b) continue;
    // x_i^a x_{i+1}^b - x_i^b x_{i+1}^a over x_i - x_{i+1}.
    const int lo = std::min(a, b);
    const int hi = std::max(a, b);
    const Rational sign = a > b ? 1 : -1;
    for (int j = 0; j < hi - lo; ++j) {
      Monomial term = m.with_exponent(i, lo + (hi - lo - 1 - j)).with_exponent(i + 1, lo + j);
      out.add_term(term, sign * c);
    }
  }
  return out;
}

}  // namespace bfc
