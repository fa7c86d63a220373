#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "peterson/cli.hpp"
#include "peterson/serialize.hpp"

using namespace peterson;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Serialize, PermutationAndSubset) {
  EXPECT_EQ(to_json(Permutation({4, 3, 2, 1, 6, 5, 7})).dump(), "[4,3,2,1,6,5,7]");
  EXPECT_EQ(to_json(IndexSubset(7, {5, 1, 2})).dump(), "[1,2,5]");
  EXPECT_EQ(to_json(Word(4, {1, 2, 1})).dump(), "[1,2,1]");
  EXPECT_EQ(permutation_from_json(Json::parse("[2,1,3]")), Permutation({2, 1, 3}));
  EXPECT_EQ(subset_from_json(5, Json::parse("[3,1]")), IndexSubset(5, {1, 3}));
  EXPECT_THROW(subset_from_json(5, Json::parse("[5]")), std::invalid_argument);
}

TEST(Serialize, PolynomialRoundTrip) {
  const TPolynomial p = TPolynomial::monomial(3600, 5) + TPolynomial::monomial(-2, 0);
  EXPECT_EQ(to_json(p).dump(), R"({"0":-2,"5":3600})");
  EXPECT_EQ(tpolynomial_from_json(to_json(p)), p);
  Integer big = 1;
  for (int k = 2; k <= 25; ++k) big *= k;
  const TPolynomial q = TPolynomial::monomial(big, 24);
  EXPECT_TRUE(to_json(q)["24"].is_string());
  EXPECT_EQ(tpolynomial_from_json(to_json(q)), q);
  EXPECT_EQ(to_json(TPolynomial()).dump(), "{}");
}

TEST(Serialize, ClassTable) {
  const Json j = class_table_json(class_of(IndexSubset(3, {1})));
  EXPECT_EQ(j.dump(), R"({"class":[1],"n":3,"table":{"":"0","1":"t","1,2":"2t","2":"0"}})");
  EXPECT_EQ(class_table_csv(class_of(IndexSubset(3, {1}))),
            "subset,fixed_point,value\n\"\",\"1,2,3\",0\n\"1\",\"2,1,3\",t\n\"2\",\"1,3,2\",0\n\"1,2\",\"3,2,1\",2t\n");
}

TEST(Cli, RestrictWorkedExample) {
  const Result r = run({"restrict", "--n", "7", "--class", "1,2,3,5,6", "--at", "1,2,3,4,5,6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3600t^5\n");
  const Result j = run({"restrict", "--n", "7", "--class", "1,2,3,5,6", "--at", "1,2,3,4,5,6", "--format", "json"});
  EXPECT_EQ(Json::parse(j.out)["value"], "3600t^5");
  EXPECT_EQ(Json::parse(j.out)["coefficients"]["5"], 3600);
}

TEST(Cli, MonkWorkedExample) {
  const Result r = run({"monk", "--n", "7", "--i", "3", "--class", "1,2,3,5,6", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["diagonal"], "3t");
  EXPECT_EQ(j["terms"], Json::parse(R"({"1,2,3,4,5,6":45})"));
  EXPECT_EQ(j["i"], 3);
  EXPECT_EQ(run({"monk", "--n", "7", "--i", "3", "--class", "1,2,3,5,6"}).out,
            "p[3]*p[1,2,3,5,6] = 3t*p[1,2,3,5,6] + 45*p[1,2,3,4,5,6]\n");
  EXPECT_EQ(run({"monk", "--n", "7", "--i", "3", "--class", "1,2,3,5,6", "--ordinary"}).out,
            "p̌[3]*p̌[1,2,3,5,6] = 45*p̌[1,2,3,4,5,6]\n");
}

TEST(Cli, FixedPoints) {
  const Result r = run({"fixed-points", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{} -> (1,2)\n{1} -> (2,1)\n");
  EXPECT_EQ(run({"fixed-points", "--n", "2"}).out, r.out);
  EXPECT_EQ(run({"fixed-points", "2", "--format", "csv"}).out, "subset,fixed_point\n\"\",\"1,2\"\n\"1\",\"2,1\"\n");
  const Json j = Json::parse(run({"--format", "json", "fixed-points", "7"}).out);
  EXPECT_EQ(j["fixed_points"].size(), 64u);
}

TEST(Cli, ProductAndPresentation) {
  EXPECT_EQ(run({"product", "--n", "4", "--left", "1", "--right", "2"}).out, "p[1]*p[2] = 2*p[1,2]\n");
  const Result p = run({"presentation", "--n", "2"});
  EXPECT_EQ(p.out, "p[1]*p[] = p[1]  [trivial]\np[1]*p[1] = t*p[1]\n");
  const Json j = Json::parse(run({"presentation", "--n", "4", "--format", "json"}).out);
  EXPECT_EQ(j["relations"].size(), 3u * 8u);
  EXPECT_EQ(j["relations"][0]["trivial"], true);
  EXPECT_EQ(run({"presentation", "--n", "2", "--ordinary"}).out, "p̌[1]*p̌[] = p̌[1]  [trivial]\np̌[1]*p̌[1] = 0\n");
}

TEST(Cli, Verify) {
  const Result r = run({"verify", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify: all checks passed"), std::string::npos);
  const Json j = Json::parse(run({"verify", "--n", "3", "--format", "json", "--parallel", "auto"}).out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"].size(), 8u);
  const Result over = run({"verify", "--n", "7"});
  EXPECT_EQ(over.code, 2);
  EXPECT_NE(over.err.find("--max-n"), std::string::npos);
  EXPECT_EQ(run({"verify", "--n", "3", "--max-n", "3"}).code, 0);
}

TEST(Cli, UsageErrorsNameTheFlagOrElement) {
  Result r = run({"restrict", "--n", "7", "--class", "1,9", "--at", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--class"), std::string::npos);
  EXPECT_NE(r.err.find("9"), std::string::npos);
  r = run({"restrict", "--n", "7", "--class", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--at"), std::string::npos);
  r = run({"monk", "--n", "5", "--i", "5", "--class", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--i"), std::string::npos);
  r = run({"class-table", "--n", "1", "--class", ""});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--n"), std::string::npos);
  r = run({"fixed-points", "3", "--format", "xml"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--format"), std::string::npos);
  r = run({"fixed-points", "3", "--parallel", "zero"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--parallel"), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"restrict", "--n", "4", "--class", "1", "--at", "1", "monk"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "peterson_cli_out_test.txt";
  const Result r = run({"restrict", "--n", "7", "--class", "1,2,3,5,6", "--at", "1,2,3,5,6", "--out", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "12t^5");
  std::filesystem::remove(path);
}

TEST(Cli, OutputIsDeterministicAndPathIndependent) {
  for (int n = 2; n <= 6; ++n) {
    const std::string rank = std::to_string(n);
    std::vector<std::vector<std::string>> commands{{"fixed-points", rank},
                                                   {"presentation", "--n", rank},
                                                   {"presentation", "--n", rank, "--ordinary"},
                                                   {"verify", "--n", rank}};
    for (const auto& a : all_subsets(n)) {
      const std::string cls = a.to_csv();
      commands.push_back({"class-table", "--n", rank, "--class", cls});
      commands.push_back({"restrict", "--n", rank, "--class", cls, "--at", IndexSubset::full(n).to_csv()});
      commands.push_back({"monk", "--n", rank, "--i", "1", "--class", cls});
      commands.push_back({"product", "--n", rank, "--left", cls, "--right", "1"});
    }
    for (const auto& base : commands)
      for (const std::string format : {"text", "json", "csv"}) {
        auto args = base;
        args.insert(args.end(), {"--format", format});
        const Result fast = run(args);
        auto oracle_args = args;
        oracle_args.insert(oracle_args.end(), {"--oracle", "--parallel", "3"});
        const Result slow = run(oracle_args);
        ASSERT_EQ(fast.code, 0) << fast.err;
        ASSERT_EQ(fast.out, slow.out) << base[0] << " n=" << n << " " << format;
        ASSERT_EQ(fast.out, run(args).out);
      }
  }
}
