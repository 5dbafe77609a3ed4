#pragma once

// Text and JSON forms of the value types.
//   permutation  w[offset: v0 v1 ...]      identity: w[0:]
//   word         s1 s2 s-1
//   partition    (3,1)  3,1  or  3 1;  () for the empty partition

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "bfc/backstable.hpp"
#include "bfc/errors.hpp"
#include "bfc/fock.hpp"
#include "bfc/maya.hpp"
#include "bfc/partition.hpp"
#include "bfc/permutation.hpp"
#include "bfc/poly.hpp"
#include "bfc/rational.hpp"

namespace bfc {

using json = nlohmann::json;

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline int parse_int(const std::string& token, const std::string& context) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer in " + context + ", got '" + token + "'");
  }
  if (used != token.size())
    throw ParseError("expected an integer in " + context + ", got '" + token + "'");
  return value;
}

inline std::vector<std::string> split_tokens(const std::string& s, const std::string& separators) {
  std::vector<std::string> out;
  std::string current;
  for (char ch : s) {
    if (separators.find(ch) != std::string::npos) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Text

inline std::string format_permutation(const Permutation& p) {
  std::string out = "w[" + std::to_string(p.offset()) + ":";
  for (int v : p.images()) out += " " + std::to_string(v);
  return out + "]";
}

inline std::string format_word(const Word& word) {
  std::string out;
  for (int a : word) out += (out.empty() ? "s" : " s") + std::to_string(a);
  return out;
}

inline Word parse_word(const std::string& text) {
  Word out;
  for (const std::string& token : detail::split_tokens(text, " \t,")) {
    if (token.size() < 2 || token[0] != 's') throw ParseError("bad word letter '" + token + "'");
    out.push_back(detail::parse_int(token.substr(1), "word"));
  }
  return out;
}

/// Accepts `w[offset: images]`, a word `s1 s2 ...`, or `id`.
inline Permutation parse_permutation(const std::string& raw) {
  const std::string text = detail::trim(raw);
  if (text == "id" || text == "e") return Permutation{};
  if (text.rfind("w[", 0) == 0) {
    if (text.back() != ']') throw ParseError("missing ']' in '" + text + "'");
    const std::string body = text.substr(2, text.size() - 3);
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw ParseError("missing ':' in '" + text + "'");
    const int offset = detail::parse_int(detail::trim(body.substr(0, colon)), "offset");
    std::vector<int> images;
    for (const std::string& token : detail::split_tokens(body.substr(colon + 1), " \t,"))
      images.push_back(detail::parse_int(token, "images"));
    try {
      return Permutation(offset, images);
    } catch (const InvalidPermutation& e) {
      throw ParseError(e.what());
    }
  }
  if (!text.empty() && text[0] == 's') return product_word(parse_word(text));
  throw ParseError("cannot parse permutation '" + text + "'");
}

inline std::string format_partition(const Partition& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.length(); ++i)
    out += (i ? "," : "") + std::to_string(lambda.parts()[i]);
  return out + ")";
}

inline Partition parse_partition(const std::string& raw) {
  std::string text = detail::trim(raw);
  if (!text.empty() && (text.front() == '(' || text.front() == '[')) {
    const char close = text.front() == '(' ? ')' : ']';
    if (text.back() != close) throw ParseError("unbalanced brackets in '" + text + "'");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> parts;
  for (const std::string& token : detail::split_tokens(text, " \t,"))
    parts.push_back(detail::parse_int(token, "partition"));
  try {
    return Partition(parts);
  } catch (const InvalidPartition& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (auto [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += v < 0 ? "x(" + std::to_string(v) + ")" : "x" + std::to_string(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

/// Human-readable form, highest degree first.
inline std::string format_poly(const MPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  // Graded lex: higher degree first, then larger powers of smaller variables.
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    const auto& fa = a.first.factors();
    const auto& fb = b.first.factors();
    for (std::size_t i = 0; i < fa.size() && i < fb.size(); ++i) {
      if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
      if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() < fb.size();
  });
  std::string out;
  for (const auto& [m, c] : terms) {
    const bool negative = c < 0;
    const Rational magnitude = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_one()) {
      out += to_string(magnitude);
    } else {
      if (magnitude != 1) out += to_string(magnitude) + "*";
      out += format_monomial(m);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("coefficient must be a string or an integer");
}

inline json to_json(const Permutation& p) {
  return json{{"offset", p.offset()}, {"images", p.images()}};
}

inline Permutation permutation_from_json(const json& j) {
  try {
    return Permutation(j.at("offset").get<int>(), j.at("images").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad permutation JSON: ") + e.what());
  } catch (const InvalidPermutation& e) {
    throw ParseError(e.what());
  }
}

inline json to_json(const Partition& lambda) { return json(lambda.parts()); }

inline Partition partition_from_json(const json& j) {
  try {
    return Partition(j.get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad partition JSON: ") + e.what());
  } catch (const InvalidPartition& e) {
    throw ParseError(e.what());
  }
}

inline json exps_to_json(const Monomial& m) {
  json out = json::object();
  for (auto [v, e] : m.factors()) out[std::to_string(v)] = e;
  return out;
}

inline Monomial monomial_from_json(const json& j) {
  std::map<int, int> exps;
  for (const auto& [key, value] : j.items())
    exps[detail::parse_int(key, "exponent key")] += value.get<int>();
  return Monomial(exps);
}

inline json to_json(const MPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back({{"coeff", to_json(c)}, {"exps", exps_to_json(m)}});
  return out;
}

inline MPoly mpoly_from_json(const json& j) {
  MPoly out;
  try {
    for (const json& term : j)
      out.add_term(monomial_from_json(term.at("exps")), rational_from_json(term.at("coeff")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
  return out;
}

inline json to_json(const FockVector& v) {
  json out = json::array();
  for (const auto& [p, c] : v) out.push_back({{"perm", to_json(p)}, {"coeff", to_json(c)}});
  return out;
}

inline FockVector fock_from_json(const json& j) {
  FockVector out;
  try {
    for (const json& term : j)
      out.add(permutation_from_json(term.at("perm")), rational_from_json(term.at("coeff")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad Fock vector JSON: ") + e.what());
  }
  return out;
}

inline json to_json(const SymP& f) {
  json out = json::array();
  for (const auto& [alpha, c] : f) out.push_back({{"p", to_json(alpha)}, {"coeff", to_json(c)}});
  return out;
}

inline SymP symp_from_json(const json& j) {
  SymP out;
  try {
    for (const json& term : j)
      out.add(partition_from_json(term.at("p")), rational_from_json(term.at("coeff")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad symmetric function JSON: ") + e.what());
  }
  return out;
}

inline json to_json(const BSym& f) {
  json out = json::array();
  for (const auto& [key, c] : f)
    out.push_back(
        {{"p", to_json(key.first)}, {"exps", exps_to_json(key.second)}, {"coeff", to_json(c)}});
  return out;
}

inline BSym bsym_from_json(const json& j) {
  BSym out;
  try {
    for (const json& term : j)
      out.add({partition_from_json(term.at("p")), monomial_from_json(term.at("exps"))},
              rational_from_json(term.at("coeff")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad back-symmetric JSON: ") + e.what());
  }
  return out;
}

/// Partition-indexed table, e.g. Schur or EG coefficients.
template <class Coeff>
json table_to_json(const std::map<Partition, Coeff>& table) {
  json out = json::array();
  for (const auto& [lambda, c] : table) {
    if constexpr (std::is_same_v<Coeff, Rational>) {
      out.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
    } else {
      out.push_back({{"partition", to_json(lambda)}, {"coeff", c.str()}});
    }
  }
  return out;
}

inline std::string format_maya(const MayaDiagram& f) {
  const int lo = std::min(f.begin(), f.center() + 1);
  const int hi = std::max(f.end(), f.center() + 1);
  std::string out;
  for (int i = lo; i < hi; ++i) {
    if (i == f.center() + 1) out += '|';
    out += f.occupied(i) ? '*' : 'o';
  }
  if (hi == f.center() + 1) out += '|';
  return out;
}

}  // namespace bfc
