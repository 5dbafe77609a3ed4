#pragma once

// Command-line surface: `bfc <verb> <subject> [flags]`, one JSON line per
// invocation on stdout (or indented text with --pretty).

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "bfc/backstable.hpp"
#include "bfc/fock.hpp"
#include "bfc/io.hpp"
#include "bfc/maya.hpp"
#include "bfc/verify.hpp"

namespace bfc::cli {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was given; carries the text to print.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Options {
  std::optional<int> vars;
  std::optional<int> k;
  std::optional<int> n;
  std::optional<int> max_len;
  std::optional<std::pair<int, int>> window;
  std::optional<std::pair<int, int>> k_range;
  bool pretty = false;
  unsigned jobs = 1;
};

struct Command {
  std::string verb;
  std::string subject_text;
  std::optional<Permutation> perm;
  std::optional<Partition> partition;
  Options options;
};

struct Report {
  bool ok = true;
  json payload = json::object();
  std::vector<std::string> diagnostics;

  void fail(std::string why) {
    ok = false;
    diagnostics.push_back(std::move(why));
  }
};

inline const std::vector<std::string>& verbs() {
  static const std::vector<std::string> all{"stanley", "schubert", "backstable", "eg",
                                            "mn",      "maya",     "verify"};
  return all;
}

namespace detail {

inline std::pair<int, int> parse_range(const std::string& text, const std::string& flag) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw UsageError(flag + " expects A..B, got '" + text + "'");
  try {
    const int a = bfc::detail::parse_int(text.substr(0, dots), flag);
    const int b = bfc::detail::parse_int(text.substr(dots + 2), flag);
    if (a > b) throw UsageError(flag + " range is empty: '" + text + "'");
    return {a, b};
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

inline void require_between(const std::optional<int>& v, int lo, int hi, const std::string& flag) {
  if (v && (*v < lo || *v > hi))
    throw UsageError(flag + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                     "]");
}

inline constexpr const char* kGrammar = R"(verbs:
  stanley    PERM       F_w truncated to --vars variables, p- and Schur expansions
  schubert   PERM       Schubert polynomial with the divided-difference check
  backstable PERM       back-stable Schubert polynomial and its --window evaluation
  eg         PERM       Edelman-Greene coefficients via F_w^(k)|id>, --k K
  mn         PERM       Murnaghan-Nakayama and dual rule for --n m, --k K
  maya       PARTITION  Maya diagram of a partition with center --k K
  verify     SWEEP      heisenberg | exp-transfer | psi | uddu | classical | all
PERM is w[offset: v0 v1 ...], a word such as "s1 s2 s-1", or id.
PARTITION is (3,1), 3,1 or (). Exit codes: 0 ok, 1 verification failure, 2 usage error.
)";

}  // namespace detail

/// Parses arguments (without the program name).
inline Command parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Boson-fermion correspondence for Schubert calculus", "bfc"};
  app.footer(detail::kGrammar);
  Command cmd;
  std::string window;
  std::string k_range;
  std::optional<int> vars, k, n, max_len;
  unsigned jobs = 1;
  bool as_json = false;
  bool pretty = false;
  app.add_option("verb", cmd.verb, "what to compute")->required()->check(CLI::IsMember(verbs()));
  app.add_option("subject", cmd.subject_text, "permutation, partition or sweep name")->required();
  app.add_option("--vars", vars, "number of variables");
  app.add_option("--k", k, "Grassmannian cut / strong-ribbon parameter");
  app.add_option("--n", n, "mode number (mn) or largest mode (verify)");
  app.add_option("--max-len", max_len, "largest permutation length in a pool");
  app.add_option("--window", window, "index window A..B");
  app.add_option("--k-range", k_range, "k values A..B for verify");
  app.add_option("--jobs", jobs, "worker threads for verify")->check(CLI::Range(1u, 256u));
  auto* json_flag = app.add_flag("--json", as_json, "JSON-lines output (default)");
  app.add_flag("--pretty", pretty, "indented human-readable output")->excludes(json_flag);
  app.set_config("--config", "", "read flags from a TOML/INI file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  Options& o = cmd.options;
  o.vars = vars;
  o.k = k;
  o.n = n;
  o.max_len = max_len;
  o.jobs = jobs;
  o.pretty = pretty;
  if (!window.empty()) o.window = detail::parse_range(window, "--window");
  if (!k_range.empty()) o.k_range = detail::parse_range(k_range, "--k-range");

  const Caps caps;
  detail::require_between(o.vars, 1, 8, "--vars");
  detail::require_between(o.n, 1, 6, "--n");
  detail::require_between(o.max_len, 0, caps.max_length, "--max-len");
  detail::require_between(o.k, -64, 64, "--k");
  if (o.window && o.window->second - o.window->first + 1 > caps.max_window)
    throw UsageError("--window is wider than " + std::to_string(caps.max_window));

  try {
    if (cmd.verb == "maya") {
      cmd.partition = parse_partition(cmd.subject_text);
    } else if (cmd.verb == "verify") {
      const auto& names = sweep_names();
      if (cmd.subject_text != "all" &&
          std::find(names.begin(), names.end(), cmd.subject_text) == names.end())
        throw UsageError("unknown sweep '" + cmd.subject_text + "'");
    } else {
      cmd.perm = parse_permutation(cmd.subject_text);
      if (cmd.perm->length() > caps.max_length)
        throw UsageError("permutation length exceeds " + std::to_string(caps.max_length));
    }
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  if (cmd.verb == "backstable" && o.window && (o.window->first > 0 || o.window->second < 0))
    throw UsageError("backstable --window must contain 0");
  return cmd;
}

namespace detail {

inline void run_stanley(const Permutation& w, const Options& o, Report& r) {
  const int nvars = o.vars.value_or(std::max(w.length(), 1));
  const MPoly trunc = stanley_trunc(w, nvars);
  const SymP p = stanley_p(w);
  r.payload["vars"] = nvars;
  r.payload["truncation"] = to_json(trunc);
  r.payload["truncation_text"] = format_poly(trunc);
  r.payload["p_expansion"] = to_json(p);
  r.payload["schur"] = table_to_json(schur_expand(trunc, nvars));
  if (p_expansion_to_poly(p, variable_range(1, nvars)) != trunc)
    r.fail("power-sum expansion of F_w disagrees with the truncation for " +
           format_permutation(w));
}

inline void run_schubert(const Permutation& w, Report& r) {
  const MPoly f = schubert_poly(w);
  r.payload["polynomial"] = to_json(f);
  r.payload["text"] = format_poly(f);
  if (!f.is_homogeneous(w.length()))
    r.fail("Schubert polynomial of " + format_permutation(w) + " is not homogeneous");
  const int top = w.is_identity() ? 1 : w.end_index();
  for (int i = 1; i <= top; ++i) {
    const Permutation ws = w * Permutation::simple(i);
    const MPoly expected = ws.length() < w.length() ? schubert_poly(ws) : MPoly{};
    if (divided_difference(f, i) != expected)
      r.fail("divided difference d_" + std::to_string(i) + " fails on " + format_permutation(w));
  }
}

inline void run_backstable(const Permutation& w, const Options& o, Report& r) {
  const auto [lo, hi] = o.window.value_or(std::pair{-3, 3});
  const BSym f = backstable(w);
  const MPoly window = eval_window(f, -lo, hi);
  r.payload["backstable"] = to_json(f);
  r.payload["window"] = json::array({lo, hi});
  r.payload["window_eval"] = to_json(window);
  r.payload["window_text"] = format_poly(window);
  r.payload["eta0"] = to_json(eta0(f));
  if (window != backstable_window_oracle(w, -lo, hi))
    r.fail("coproduct formula disagrees with the shift limit for " + format_permutation(w));
  if (eta0(f) != stanley_p(w))
    r.fail("eta0 of the back-stable polynomial is not F_w for " + format_permutation(w));
}

inline void run_eg(const Permutation& w, const Options& o, Report& r) {
  const int k = o.k.value_or(0);
  const auto table = eg_coeffs(w, k);
  r.payload["k"] = k;
  r.payload["eg"] = table_to_json(table);
  const int nvars = w.length() + 1;
  std::map<Partition, Rational> as_rational;
  for (const auto& [lambda, c] : table) as_rational[lambda] = Rational(c);
  if (as_rational != schur_expand(stanley_trunc(w, nvars), nvars))
    r.fail("EG table disagrees with the Schur expansion of F_w for " + format_permutation(w));
}

inline void run_mn(const Permutation& w, const Options& o, Report& r) {
  const int m = o.n.value_or(1);
  const int k = o.k.value_or(0);
  const int nvars = o.vars.value_or(3);
  json chis = json::array();
  for (const Partition& alpha : partitions_of(w.length()))
    chis.push_back({{"alpha", to_json(alpha)}, {"chi", chi(w, alpha).str()}});
  json growth = json::array();
  for (const SignedNeighbor& s : strong_ribbon_grow(w, k, m))
    growth.push_back({{"perm", to_json(s.target)}, {"sign", s.sign}});
  r.payload["n"] = m;
  r.payload["k"] = k;
  r.payload["vars"] = nvars;
  r.payload["chi"] = chis;
  r.payload["strong_ribbons"] = growth;
  if (p_expansion_to_poly(stanley_p(w), variable_range(1, nvars)) != stanley_trunc(w, nvars))
    r.fail("MN rule: sum chi/z p_alpha != F_w for " + format_permutation(w));
  if (!dual_mn_check(w, m, k, nvars))
    r.fail("dual MN rule: p_" + std::to_string(m) + " F_w != signed sum of F_u for " +
           format_permutation(w) + " at k=" + std::to_string(k));
}

inline void run_maya(const Partition& lambda, const Options& o, Report& r) {
  const int k = o.k.value_or(0);
  const MayaDiagram f = maya_from_partition(lambda, k);
  const Permutation labels = maya_labels(f);
  r.payload["k"] = k;
  r.payload["diagram"] = format_maya(f);
  json black = json::array();
  for (int b : f.black_in_window()) black.push_back(b);
  r.payload["black_in_window"] = black;
  r.payload["labels"] = to_json(labels);
  r.payload["grassmannian"] = to_json(grassmannian_from_partition(lambda, k));
  if (partition_from_maya(f) != std::pair{lambda, k})
    r.fail("Maya round trip fails for " + format_partition(lambda));
  if (labels.inverse() != grassmannian_from_partition(lambda, k))
    r.fail("Maya labels are not the inverse Grassmannian permutation of " +
           format_partition(lambda));
}

inline void run_verify(const std::string& sweep, const Options& o, Report& r) {
  SweepOptions so;
  if (o.window) {
    so.window_lo = o.window->first;
    so.window_hi = o.window->second;
  }
  so.max_length = o.max_len;
  if (o.k_range) {
    so.k_lo = o.k_range->first;
    so.k_hi = o.k_range->second;
  }
  if (o.n) so.n_max = *o.n;
  so.jobs = o.jobs;
  std::vector<std::string> names = sweep == "all" ? sweep_names() : std::vector{sweep};
  json sweeps = json::array();
  for (const std::string& name : names) {
    const SweepResult result = run_named_sweep(name, so);
    json failures = json::array();
    for (std::size_t i = 0; i < result.failures.size() && i < 20; ++i)
      failures.push_back(result.failures[i]);
    sweeps.push_back({{"sweep", name},
                      {"checked", result.checked},
                      {"failure_count", result.failures.size()},
                      {"failures", failures}});
    for (const std::string& f : result.failures) r.fail(name + ": " + f);
  }
  r.payload["sweeps"] = sweeps;
}

}  // namespace detail

/// Dispatches a parsed command. Module errors turn into a failed report.
inline Report execute(const Command& c) {
  Report r;
  r.payload["verb"] = c.verb;
  r.payload["subject"] = c.subject_text;
  if (c.perm) r.payload["perm"] = to_json(*c.perm);
  if (c.partition) r.payload["partition"] = to_json(*c.partition);
  try {
    if (c.verb == "stanley") detail::run_stanley(*c.perm, c.options, r);
    else if (c.verb == "schubert") detail::run_schubert(*c.perm, r);
    else if (c.verb == "backstable") detail::run_backstable(*c.perm, c.options, r);
    else if (c.verb == "eg") detail::run_eg(*c.perm, c.options, r);
    else if (c.verb == "mn") detail::run_mn(*c.perm, c.options, r);
    else if (c.verb == "maya") detail::run_maya(*c.partition, c.options, r);
    else if (c.verb == "verify") detail::run_verify(c.subject_text, c.options, r);
  } catch (const Error& e) {
    r.fail(e.what());
  } catch (const std::exception& e) {
    r.fail(std::string("internal error: ") + e.what());
  }
  return r;
}

inline json report_to_json(const Report& r) {
  return {{"status", r.ok ? "ok" : "fail"}, {"payload", r.payload}, {"diagnostics", r.diagnostics}};
}

inline std::string render(const Report& r, bool pretty) {
  const json j = report_to_json(r);
  if (!pretty) return j.dump() + "\n";
  std::ostringstream out;
  out << "status: " << (r.ok ? "ok" : "fail") << "\n";
  for (const auto& [key, value] : r.payload.items())
    out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump(2)) << "\n";
  for (const std::string& d : r.diagnostics) out << "! " << d << "\n";
  return out.str();
}

/// Whole program: parse, execute, print; returns the exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n(run with --help for the grammar)\n";
    return kExitUsage;
  }
  const Report report = execute(cmd);
  out << render(report, cmd.options.pretty);
  return report.ok ? kExitOk : kExitFailure;
}

}  // namespace bfc::cli
