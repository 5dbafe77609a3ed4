#pragma once

#include <map>
#include <utility>

#include "bfc/rational.hpp"

namespace bfc {

/// Finite formal Q-linear combination of `Key`s. Zero coefficients are never
/// stored. `Tag` keeps combinations over different bases apart.
template <class Key, class Tag>
class Combination {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;

  Combination() = default;
  Combination(const Key& key, Rational coeff = 1) { add(key, std::move(coeff)); }

  void add(const Key& key, const Rational& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational coeff(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const map_type& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Combination& operator+=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  Combination& operator-=(const Combination& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  Combination& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  friend Combination operator+(Combination a, const Combination& b) { return a += b; }
  friend Combination operator-(Combination a, const Combination& b) { return a -= b; }
  friend Combination operator*(const Rational& s, Combination a) { return a *= s; }
  friend Combination operator*(Combination a, const Rational& s) { return a *= s; }
  bool operator==(const Combination&) const = default;

 private:
  map_type terms_;
};

}  // namespace bfc
