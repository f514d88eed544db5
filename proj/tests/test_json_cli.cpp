#include "ksphere/cli.hpp"
#include "ksphere/errors.hpp"
#include "ksphere/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace ksphere;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("ksphere-test-" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string input_error(const std::string& text) {
  try {
    parse_group_spec_text(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST(SpecParsing, Families) {
  EXPECT_EQ(parse_group_spec_text(R"({"family": "S", "n": 3})").group.label(), "S3");
  EXPECT_EQ(parse_group_spec_text(R"({"family": "dihedral", "n": 4})").group.label(), "D4");
  EXPECT_EQ(parse_group_spec_text(R"({"family": "Q8"})").group.label(), "Q8");
  auto p = parse_group_spec_text(
      R"({"family": "product", "factors": [{"family": "S", "n": 3}, {"family": "C", "n": 2}],
          "lambda": {"convention": "right:onto-pm1"}})");
  EXPECT_EQ(p.group.label(), "S3xC2");
  ASSERT_TRUE(p.lambda && p.lambda->convention);
  EXPECT_EQ(*p.lambda->convention, "right:onto-pm1");
  auto g = parse_group_spec_text(R"({"generators": [[1, 2, 0], [1, 0, 2]], "lambda": {"generator_signs": [1, -1]}})");
  EXPECT_EQ(build_group(g.group).order, 6u);
  EXPECT_EQ(g.lambda->generator_signs, (std::vector<int>{1, -1}));
}

TEST(SpecParsing, ErrorsNameTheField) {
  EXPECT_NE(input_error(R"({"family": "S"})").find("field 'n'"), std::string::npos);
  EXPECT_NE(input_error(R"({"family": "X", "n": 3})").find("field 'family'"), std::string::npos);
  EXPECT_NE(input_error(R"({"family": "C", "n": -1})").find("field 'n'"), std::string::npos);
  EXPECT_NE(input_error(R"({"family": "Q", "n": 16})").find("field 'n'"), std::string::npos);
  EXPECT_NE(input_error(R"({"generators": [[0, 0, 1]]})").find("generators"), std::string::npos);
  EXPECT_NE(input_error(R"({"family": "product", "factors": [{"family": "C"}, {"family": "C", "n": 2}]})")
                .find("factors"),
            std::string::npos);
  EXPECT_NE(input_error(R"({"family": "C", "n": 2, "lambda": {}})").find("lambda"), std::string::npos);
  EXPECT_NE(input_error("{not json").find("not valid JSON"), std::string::npos);
  EXPECT_NE(input_error("[1]").find("spec"), std::string::npos);
}

TEST(SpecParsing, LambdaResolution) {
  auto p = parse_group_spec_text(R"({"family": "D", "n": 4, "lambda": {"convention": "reflection-sign"}})");
  auto g = build_group(p.group);
  auto l = resolve_lambda(p, g);
  EXPECT_EQ(lambda_label(p, g, l), "reflection-sign");
  auto bad = parse_group_spec_text(R"({"family": "D", "n": 4, "lambda": {"convention": "sign"}})");
  EXPECT_THROW(resolve_lambda(bad, g), InputError);
  auto count = parse_group_spec_text(R"({"family": "D", "n": 4, "lambda": {"generator_signs": [1]}})");
  EXPECT_THROW(resolve_lambda(count, g), InputError);
  auto none = parse_group_spec_text(R"({"family": "D", "n": 4})");
  EXPECT_THROW(resolve_lambda(none, g), InputError);
}

TEST(JsonRoundTrip, Cyclotomic) {
  for (const auto& v : {Cyclotomic(12, {1, -2, 0, 3}), Cyclotomic(3, {1, 1}, 2), Cyclotomic::integer(1, -4)}) {
    EXPECT_EQ(cyclotomic_from_json(to_json(v)), v);
  }
  EXPECT_THROW(cyclotomic_from_json(json{{"modulus", 5}, {"coefficients", {1, 2}}}), InputError);
}

TEST(JsonRoundTrip, KGroupDocuments) {
  for (const auto& [spec, conv] : std::vector<std::pair<GroupSpec, std::string>>{
           {GroupSpec::symmetric(3), "sign"},
           {GroupSpec::dihedral(5), "reflection-sign"},
           {GroupSpec::quaternion(), "j-kernel"},
           {GroupSpec::cyclic(4), "onto-pm1"}}) {
    auto s = make_setting(spec, conv);
    auto p = k_group_s1_lambda(s);
    auto j = to_json(s, p);
    EXPECT_EQ(j["schema"], "ksphere.kgroup");
    EXPECT_EQ(j["version"], kJsonSchemaVersion);
    EXPECT_EQ(j["product"], "zero");
    EXPECT_EQ(kgroup_from_json(json::parse(j.dump())), summarize(p));
    auto q = k_group_s_lambda(s);
    EXPECT_EQ(kgroup_from_json(json::parse(to_json(s, q).dump())), summarize(q));
  }
  auto bad = to_json(make_setting(GroupSpec::cyclic(2), "onto-pm1"),
                     k_group_s_lambda(make_setting(GroupSpec::cyclic(2), "onto-pm1")));
  bad["version"] = 99;
  EXPECT_THROW(kgroup_from_json(bad), InputError);
}

TEST(JsonRoundTrip, Report) {
  Report r{{"group_axioms", "S3", "-", Status::pass, "ok"},
           {"presentation", "S3", "sign", Status::fail, "rank 1"},
           {"central_b_rank_zero", "S3", "sign", Status::info, "x"}};
  auto j = to_json(r);
  EXPECT_EQ(j["schema"], "ksphere.report");
  EXPECT_EQ(j["summary"]["total"], 3);
  EXPECT_EQ(j["summary"]["failed"], 1);
  EXPECT_EQ(report_from_json(json::parse(j.dump())), r);
}

TEST(JsonRoundTrip, CharacterTable) {
  auto s = make_setting(GroupSpec::symmetric(3), "sign");
  auto j = to_json(*s.table, "S3");
  EXPECT_EQ(j["schema"], "ksphere.chartab");
  ASSERT_EQ(j["characters"].size(), 3u);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t c = 0; c < 3; ++c)
      EXPECT_EQ(cyclotomic_from_json(j["characters"][i]["values"][c]), s.table->irreducible(i)[c]);
}

TEST(Cli, KGroupExamples) {
  auto r = cli({"kgroup", R"({"family": "S", "n": 3, "lambda": {"convention": "sign"}})", "--sphere", "s1-lambda"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("rank 1\n"), std::string::npos);
  EXPECT_NE(r.out.find("product: identically zero"), std::string::npos);

  auto c6 = cli({"kgroup", R"({"family": "C", "n": 6, "lambda": {"convention": "onto-pm1"}})", "--sphere", "s1-lambda"});
  EXPECT_EQ(c6.code, 0) << c6.err;
  EXPECT_NE(c6.out.find("rank 0\n"), std::string::npos);

  auto c2 = cli({"kgroup", R"({"family": "C", "n": 2, "lambda": {"convention": "onto-pm1"}})", "--sphere", "s-lambda"});
  EXPECT_EQ(c2.code, 0) << c2.err;
  EXPECT_NE(c2.out.find("rank 1\n"), std::string::npos);
}

TEST(Cli, JsonOutputFromSpecFile) {
  auto spec = scratch("d4.json");
  std::ofstream(spec) << R"({"family": "dihedral", "n": 4, "lambda": {"convention": "reflection-sign"}})";
  auto out = scratch("d4-kgroup.json");
  auto r = cli({"kgroup", spec.string(), "--sphere", "s1-lambda", "--json", out.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = read_json(out);
  EXPECT_EQ(j["rank"], 1);
  EXPECT_EQ(j["group"], "D4");

  auto table = scratch("d4-table.json");
  ASSERT_EQ(cli({"chartab", spec.string(), "--json", table.string()}).code, 0);
  EXPECT_EQ(read_json(table)["characters"].size(), 5u);
}

TEST(Cli, Verify) {
  auto r = cli({"verify", "--all-upto", "16", "--samples", "5", "--threads", "1"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);

  auto path = scratch("report.json");
  auto one = cli({"verify", R"({"family": "S", "n": 4})", "--samples", "5", "--json", path.string()});
  EXPECT_EQ(one.code, 0) << one.out;
  auto report = report_from_json(read_json(path));
  EXPECT_EQ(report.size(), 2u + 9u);
  EXPECT_TRUE(all_passed(report));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"--help"}).code, 0);
  EXPECT_EQ(cli({"kgroup", "--help"}).code, 0);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"chartab", "{oops"}).code, 2);
  EXPECT_EQ(cli({"chartab", R"({"family": "Z", "n": 3})"}).code, 2);
  EXPECT_EQ(cli({"chartab", "/nonexistent/spec.json"}).code, 2);
  EXPECT_EQ(cli({"kgroup", R"({"family": "C", "n": 3, "lambda": {"convention": "onto-pm1"}})",
                 "--sphere", "s1-lambda"}).code,
            2);
  EXPECT_EQ(cli({"kgroup", R"({"family": "C", "n": 2, "lambda": {"convention": "onto-pm1"}})",
                 "--sphere", "s7"}).code,
            2);
  EXPECT_EQ(cli({"verify"}).code, 2);
  EXPECT_EQ(cli({"verify", R"({"family": "A", "n": 4})"}).code, 2);
  auto r = cli({"chartab", R"({"family": "X"})"});
  EXPECT_NE(r.err.find("field 'family'"), std::string::npos);
}

TEST(Cli, OrderCapFromEnvironment) {
  ::setenv("KSPHERE_ORDER_CAP", "10", 1);
  auto big = cli({"chartab", R"({"family": "S", "n": 4})"});
  auto small = cli({"chartab", R"({"family": "S", "n": 3})"});
  ::setenv("KSPHERE_ORDER_CAP", "zero", 1);
  auto invalid = cli({"chartab", R"({"family": "S", "n": 3})"});
  ::unsetenv("KSPHERE_ORDER_CAP");
  EXPECT_EQ(big.code, 2);
  EXPECT_EQ(small.code, 0);
  EXPECT_EQ(invalid.code, 2);
}

TEST(Cli, BinaryExitStatus) {
  const std::string bin = KSPHERE_CLI_PATH;
  auto status = [&](const std::string& args) {
    int raw = std::system((bin + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("--help"), 0);
  EXPECT_EQ(status("chartab '{\"family\": \"S\", \"n\": 3}'"), 0);
  EXPECT_EQ(status("chartab '{\"family\": \"nope\"}'"), 2);
}
