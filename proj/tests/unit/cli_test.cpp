#include <gml/json_io.hpp>
#include <gml_cli/cli.hpp>
#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

using namespace gml;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "gml");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GML_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, FormulaBhargavaJson) {
  const auto r = run({"formula", "bhargava", "--n", "3", "--report", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto m = json::mass_pair_from_json(json::parse(r.out));
  EXPECT_EQ(std::get<ClassFunction>(m.mass_v).to_string(), "1 + Q^-1 + Q^-2");
  EXPECT_EQ(std::get<ClassFunction>(m.mass_w).to_string(), "Q^2 + Q + 1");
}

TEST(Cli, FormulaText) {
  const auto r = run({"formula", "kedlaya", "--n", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "mass_v = 1 + Q^-1\nmass_w = Q + 1\n");
  const auto h = run({"formula", "hilbert", "--n", "2"});
  EXPECT_EQ(h.out, "hilb_plane = Q^4 + Q^3\nfiber = 2*Q^2 + 2*Q + 1\n");
}

TEST(Cli, DivergentProfileExitsWithThree) {
  const auto r = run({"profile", "--builtin", "quad_char2_sigma", "--n", "1"});
  EXPECT_EQ(r.code, cli::kDivergent);
  EXPECT_NE(r.err.find(R"("error":"DivergentSeries")"), std::string::npos);
  EXPECT_NE(r.out.find("infinite"), std::string::npos);
}

TEST(Cli, ProfileFileAndBuiltinAgree) {
  const auto a = run({"profile", "--file", data("profile_char2_sigma2.json"), "--report", "json"});
  const auto b = run({"profile", "--builtin", "quad_char2_sigma", "--n", "2", "--q-symbolic", "--report", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, PipelineIntoDuality) {
  const auto masses = run({"profile", "--builtin", "quad_char2_upsilon", "--n", "1", "--m", "1", "--report", "json"});
  ASSERT_EQ(masses.code, 0);
  const auto r = run({"duality", "--mv", "-", "--mw", "-", "--d", "4", "--report", "json"}, masses.out);
  EXPECT_EQ(r.code, cli::kCheckFailed);
  const auto report = json::report_from_json(json::parse(r.out));
  EXPECT_FALSE(report.strong);
  EXPECT_FALSE(report.weak);
  const auto ok = run({"duality", "--masses", "-", "--d", "6"},
                      run({"formula", "bhargava", "--n", "3", "--report", "json"}).out);
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("strong = true"), std::string::npos);
}

TEST(Cli, DualityWithDivergentInput) {
  const auto masses = run({"profile", "--builtin", "quad_char2_sigma", "--n", "1", "--report", "json"});
  EXPECT_EQ(run({"duality", "--masses", "-", "--d", "2"}, masses.out).code, cli::kDivergent);
}

TEST(Cli, TameFromFile) {
  const auto r = run({"tame", "--group", data("s3_perm_doubled.json"), "--q", "5", "--report", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, run({"formula", "bhargava", "--n", "3", "--report", "json"}).out);
  const auto threaded = run({"tame", "--group", data("s3_perm_doubled.json"), "--q", "5", "--report", "json", "--threads", "4"});
  EXPECT_EQ(threaded.out, r.out);
  const auto not_tame = run({"tame", "--group", data("s3_perm_doubled.json"), "--q", "3"});
  EXPECT_EQ(not_tame.code, cli::kInputError);
  EXPECT_NE(not_tame.err.find("NotTame"), std::string::npos);
}

TEST(Cli, StringyChecks) {
  const auto a1 = run({"stringy", "--file", data("a1_cone.json"), "--check-gm", "--d", "2"});
  EXPECT_EQ(a1.code, 0) << a1.err;
  EXPECT_NE(a1.out.find("gm_duality = true"), std::string::npos);
  EXPECT_NE(a1.out.find("gm_quotient = Q + 1"), std::string::npos);
  const auto bad = run({"stringy", "--file", data("a1_cone.json"), "--check-gm", "--d", "3"});
  EXPECT_EQ(bad.code, cli::kCheckFailed);
  const auto z3 = run({"stringy", "--file", data("z3_cone.json"), "--report", "json"});
  EXPECT_EQ(z3.code, 0);
  const auto j = json::parse(z3.out);
  EXPECT_EQ(json::class_function_from_json(j["total"]).to_string(), "Q^2 + Q^(4/3) + Q^(2/3)");
  const auto lc = run({"stringy", "--file", data("log_canonical.json")});
  EXPECT_EQ(lc.code, cli::kDivergent);
  const auto poincare = run({"stringy", "--file", data("log_canonical.json"), "--check-poincare"});
  EXPECT_EQ(poincare.code, cli::kInputError);
}

TEST(Cli, Scenarios) {
  EXPECT_EQ(run({"scenario", data("scenario_tame_s3.json"), "--report", "json"}).out,
            run({"formula", "bhargava", "--n", "3", "--report", "json"}).out);
  const auto u = run({"scenario", data("scenario_upsilon.json")});
  EXPECT_EQ(u.out, "mass_v = 2\nmass_w = 2*Q\n");
  EXPECT_EQ(run({"scenario", data("scenario_duality.json")}).code, cli::kCheckFailed);
  EXPECT_EQ(run({"scenario", "-"}, R"({"kind":"formula","payload":{"name":"kedlaya","n":1}})").out,
            "mass_v = 1 + Q^-1\nmass_w = Q + 1\n");
  EXPECT_EQ(run({"scenario", "-"}, R"({"kind":"nope","payload":{}})").code, cli::kInputError);
}

TEST(Cli, Evaluation) {
  const auto r = run({"formula", "kedlaya", "--n", "2", "--eval", "3", "1"});
  EXPECT_NE(r.out.find("mass_v(q=3, r=1) = 17/9"), std::string::npos) << r.out;
  ::setenv("GML_PRECISION", "15", 1);
  const auto p = run({"profile", "--builtin", "quad_char0_sigma", "--n", "1", "--eval", "2", "1", "--report", "json"});
  ::unsetenv("GML_PRECISION");
  const auto j = json::parse(p.out);
  EXPECT_EQ(j["evaluation"]["mass_w"]["decimal"].get<std::string>(), "3.41421356237310e+0");
  ::setenv("GML_PRECISION", "zero", 1);
  EXPECT_EQ(run({"formula", "kedlaya", "--n", "1", "--eval", "2", "1"}).code, cli::kInputError);
  ::unsetenv("GML_PRECISION");
}

TEST(Cli, Verify) {
  const auto r = run({"verify", "--suite", "partitions"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("suite partitions: 5/5 passed"), std::string::npos);
  EXPECT_EQ(run({"verify", "--suite", "bogus"}).code, cli::kInputError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kInputError);
  EXPECT_EQ(run({"formula", "bhargava"}).code, cli::kInputError);
  EXPECT_EQ(run({"formula", "euler", "--n", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"formula", "bhargava", "--n", "x"}).code, cli::kInputError);
  EXPECT_EQ(run({"profile", "--builtin", "nope", "--n", "2"}).code, cli::kInputError);
  EXPECT_EQ(run({"profile", "--builtin", "quad_char2_sigma"}).code, cli::kInputError);
  EXPECT_EQ(run({"tame", "--group", data("missing.json"), "--q", "5"}).code, cli::kInputError);
  EXPECT_EQ(run({"formula", "bhargava", "--n", "2", "--report", "xml"}).code, cli::kInputError);
  EXPECT_EQ(run({"formula", "bhargava", "--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"formula", "kedlaya", "--n", "4", "--report", "json"},
           {"profile", "--builtin", "quad_char0_sigma", "--n", "3", "--report", "json"},
           {"tame", "--group", data("b2_signed_doubled.json"), "--q", "5", "--report", "json"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
