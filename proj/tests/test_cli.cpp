#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bfc/cli.hpp"

using namespace bfc;
using namespace bfc::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json schur_table(const std::map<Partition, Rational>& t) { return table_to_json(t); }

}  // namespace

TEST(ParseArgs, Examples) {
  const Command c = parse_args({"stanley", "w[1: 2 3 1]", "--vars", "2"});
  EXPECT_EQ(c.verb, "stanley");
  EXPECT_EQ(*c.perm, product_word({1, 2}));
  EXPECT_EQ(c.options.vars, 2);

  const Command v = parse_args({"verify", "heisenberg", "--max-len", "4"});
  EXPECT_EQ(v.verb, "verify");
  EXPECT_EQ(v.options.max_len, 4);

  EXPECT_THROW(parse_args({"stanley", "not-a-perm"}), UsageError);
}

TEST(ParseArgs, Rejections) {
  EXPECT_THROW(parse_args({"stanley", "id", "--bogus"}), UsageError);
  EXPECT_THROW(parse_args({"frobnicate", "id"}), UsageError);
  EXPECT_THROW(parse_args({"verify", "everything"}), UsageError);
  EXPECT_THROW(parse_args({"stanley", "id", "--vars", "0"}), UsageError);
  EXPECT_THROW(parse_args({"verify", "psi", "--window", "3..1"}), UsageError);
  EXPECT_THROW(parse_args({"verify", "psi", "--window", "-9..9"}), UsageError);
  EXPECT_THROW(parse_args({"stanley", "id", "--json", "--pretty"}), UsageError);
  EXPECT_THROW(parse_args({}), UsageError);
  EXPECT_THROW(parse_args({"--help"}), HelpRequested);
}

TEST(ParseArgs, WindowAndRanges) {
  const Command c = parse_args({"verify", "uddu", "--window", "-1..3", "--k-range", "0..1"});
  EXPECT_EQ(c.options.window, std::pair(-1, 3));
  EXPECT_EQ(c.options.k_range, std::pair(0, 1));
}

TEST(ParseArgs, ConfigFile) {
  const std::string path = ::testing::TempDir() + "bfc_test_config.toml";
  {
    std::ofstream f(path);
    f << "vars = 3\nk = 2\nwindow = \"-1..2\"\n";
  }
  const Command c = parse_args({"stanley", "s1", "--config", path});
  EXPECT_EQ(c.options.vars, 3);
  EXPECT_EQ(c.options.k, 2);
  EXPECT_EQ(c.options.window, std::pair(-1, 2));
}

TEST(Execute, Stanley) {
  const Report r = execute(parse_args({"stanley", "s2 s1", "--vars", "2"}));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.payload.at("truncation_text"), "x1^2 + x1*x2 + x2^2");
  EXPECT_EQ(r.payload.at("schur"), schur_table({{Partition{2}, 1}}));
}

TEST(Execute, Eg) {
  const Report r = execute(parse_args({"eg", "s1 s2", "--k", "1"}));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.payload.at("eg"), json::parse(R"([{"partition":[1,1],"coeff":"1"}])"));
}

TEST(Execute, Schubert) {
  const Report r = execute(parse_args({"schubert", "w[1: 1 4 3 2]"}));
  EXPECT_TRUE(r.ok) << r.diagnostics.front();
  const Report bad = execute(parse_args({"schubert", "s0"}));
  EXPECT_FALSE(bad.ok);
  EXPECT_NE(bad.diagnostics.front().find("UnsupportedWindow"), std::string::npos);
}

TEST(Execute, BackstableMnMaya) {
  EXPECT_TRUE(execute(parse_args({"backstable", "s1", "--window", "-1..1"})).ok);
  const Report mn = execute(parse_args({"mn", "id", "--n", "2", "--k", "1"}));
  EXPECT_TRUE(mn.ok);
  EXPECT_EQ(mn.payload.at("strong_ribbons").size(), 2u);
  const Report maya = execute(parse_args({"maya", "(3,1)", "--k", "3"}));
  EXPECT_TRUE(maya.ok);
  EXPECT_EQ(maya.payload.at("diagram"), "o*|oo*");
}

TEST(Execute, VerifyHeisenbergSmallPool) {
  const Report r =
      execute(parse_args({"verify", "heisenberg", "--window", "-1..2", "--max-len", "2"}));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.payload.at("sweeps")[0].at("failure_count"), 0);
}

TEST(Run, ExitCodesAndDeterminism) {
  const Outcome ok = run_cli({"eg", "w[1: 2 3 1]", "--k", "1"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out.back(), '\n');
  EXPECT_EQ(ok.out.find('\n'), ok.out.size() - 1);  // one JSON line
  const json j = json::parse(ok.out);
  EXPECT_EQ(j.at("status"), "ok");
  EXPECT_EQ(run_cli({"eg", "w[1: 2 3 1]", "--k", "1"}).out, ok.out);

  EXPECT_EQ(run_cli({"stanley", "not-a-perm"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"schubert", "s0"}).code, kExitFailure);
  const Outcome help = run_cli({"--help"});
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("verify"), std::string::npos);
  EXPECT_NE(run_cli({"eg", "s1", "--pretty"}).out.find("status: ok"), std::string::npos);
}

TEST(Run, JsonPayloadRoundTrips) {
  const Outcome o = run_cli({"backstable", "s-1 s2"});
  const json j = json::parse(o.out);
  const BSym f = bsym_from_json(j.at("payload").at("backstable"));
  EXPECT_EQ(f, backstable(product_word({-1, 2})));
}
