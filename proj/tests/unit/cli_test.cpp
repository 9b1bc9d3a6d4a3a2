#include <gtest/gtest.h>

#include <sstream>

#include "vogelcas/cli.hpp"
#include "vogelcas/identities.hpp"

namespace vogelcas::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

TEST(CliSeriesTest, UniversalA1) {
  const Result r = run_cli({"series", "--algebra", "A1", "--kind", "universal", "--order", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["coeffs"], Json::parse(R"(["3","0","1","-1/4","1/2"])"));
  EXPECT_EQ(j["dim"], "3");
  EXPECT_EQ(j["t"], "2");
  EXPECT_EQ(j["vogel"], Json::parse(R"(["-1","1","1"])"));
}

TEST(CliSeriesTest, CanonicalFromVogelTriple) {
  const Result r = run_cli({"series", "--vogel", "-2,12,20", "--kind", "canonical", "--order", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["coeffs"], Json::parse(R"(["0","1","13/60"])"));
}

TEST(CliSeriesTest, OkuboA2) {
  const Result r = run_cli({"series", "--algebra", "A2", "--kind", "okubo", "--order", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["coeffs"], Json::parse(R"(["8","0","1"])"));
}

TEST(CliSeriesTest, SuperAlgebraWithVanishingParameter) {
  const Result r = run_cli({"series", "--algebra", "osp(8|4)", "--order", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["coeffs"], Json::parse(R"(["6","0","1"])"));
}

TEST(CliSeriesTest, BadInputsExitWithUsageCode) {
  EXPECT_EQ(run_cli({"series", "--vogel", "1,1,-2"}).code, kExitUsage);       // t = 0
  EXPECT_EQ(run_cli({"series", "--vogel", "-2,3,3", "--kind", "okubo"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"series", "--algebra", "A0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"series"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"series", "--algebra", "A1", "--vogel", "-2,2,2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"series", "--algebra", "A1", "--kind", "weird"}).code, kExitUsage);
  const Result r = run_cli({"series", "--vogel", "1,1,-2"});
  EXPECT_NE(r.err.find("t = 0"), std::string::npos);
}

TEST(CliSeriesTest, CsvAndMarkdown) {
  const Result csv = run_cli({"series", "--algebra", "A1", "--order", "3", "--format", "csv"});
  EXPECT_EQ(csv.out, "algebra,k,coefficient\nA1,0,3\nA1,1,0\nA1,2,1\nA1,3,-1/4\n");
  const Result md = run_cli({"series", "--algebra", "A1", "--order", "1", "--format", "md"});
  EXPECT_NE(md.out.find("| 0 | 3 |"), std::string::npos);
}

TEST(CliTableTest, SimpleMarkdownHasE8Row) {
  const Result r = run_cli({"table", "--which", "simple", "--format", "md"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("| E8 | -2 | 12 | 20 | 30 | 248 |"), std::string::npos) << r.out;
}

TEST(CliTableTest, SuperIncludesExcludedRow) {
  const Result r = run_cli({"table", "--which", "super"});
  ASSERT_EQ(r.code, kExitOk);
  bool found = false;
  for (const auto& line : lines(r.out)) {
    const Json j = Json::parse(line);
    if (j["family"] == "D(2|1;lambda)") {
      found = true;
      EXPECT_EQ(j["status"], "excluded");
      EXPECT_EQ(j["t"], "0");
    }
  }
  EXPECT_TRUE(found);
}

TEST(CliTableTest, CsvHeader) {
  const Result r = run_cli({"table", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(lines(r.out).front(), "family,alpha,beta,gamma,t,dim");
  EXPECT_EQ(lines(r.out).size(), 10u);
}

TEST(CliTableTest, UnknownFormatIsUsageError) {
  EXPECT_EQ(run_cli({"table", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"table", "--which", "other"}).code, kExitUsage);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(CliVerifyTest, A1ContainsQuarticCheck) {
  const Result r = run_cli({"verify", "--suite", "A1"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["algebra"], "A1");
  bool found = false;
  for (const auto& c : j["checks"])
    if (c["name"] == "thm2_k2") {
      found = true;
      EXPECT_EQ(c["status"], "pass");
      EXPECT_EQ(c["lhs"], "5/8");
      EXPECT_EQ(c["rhs"], "5/8");
    }
  EXPECT_TRUE(found);
}

TEST(CliVerifyTest, CorruptedPointFails) {
  const Result r = run_cli({"verify", "--suite", "A2", "--vogel", "-2,2,4"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
}

TEST(CliVerifyTest, BadSuiteIsUsageError) {
  EXPECT_EQ(run_cli({"verify", "--suite", "Q7"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "sl(4|2)"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "A1,A2", "--vogel", "-2,2,2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--suite", "A1", "--max-k", "0"}).code, kExitUsage);
}

TEST(CliVerifyTest, SuiteListAndCsv) {
  EXPECT_EQ(parse_suite("A1,E6,osp(7,2)").size(), 3u);
  const Result r = run_cli({"verify", "--suite", "A1,A2", "--max-k", "2", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  const auto ls = lines(r.out);
  EXPECT_EQ(ls.front(), "algebra,check,status,lhs,rhs");
  // One header only, even with several algebras.
  EXPECT_EQ(std::count(ls.begin(), ls.end(), ls.front()), 1);
}

TEST(CliIdentitiesTest, AllPass) {
  const Result r = run_cli({"identities"});
  ASSERT_EQ(r.code, kExitOk);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["checks"].size(), 7u);
  for (const auto& c : j["checks"]) EXPECT_EQ(c["status"], "pass") << c.dump();
}

TEST(IdentitiesTest, OrthogonalLinePowerSums) {
  const OrthogonalLine line = orthogonal_line();
  EXPECT_EQ(line.t2.eval(Rational(5)), Rational(21));
  EXPECT_EQ(line.t.str("n"), "n - 2");
  for (const Check& c : so_n_identities()) EXPECT_TRUE(c.pass) << c.name;
}

TEST(CliJsonTest, EveryRecordRoundTripsByteIdentically) {
  const std::vector<std::vector<std::string>> commands{
      {"table", "--which", "simple"},
      {"table", "--which", "super"},
      {"table", "--which", "suite"},
      {"series", "--algebra", "G2", "--order", "6"},
      {"series", "--vogel", "-2,10/3,8/3", "--kind", "canonical"},
      {"verify", "--suite", "A2,G2", "--max-k", "3"},
      {"identities"}};
  for (const auto& cmd : commands) {
    const Result r = run_cli(cmd);
    ASSERT_EQ(r.code, kExitOk) << cmd.front();
    for (const auto& line : lines(r.out)) EXPECT_EQ(Json::parse(line).dump(), line);
  }
}

TEST(CliTest, HelpExitsZero) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("series"), std::string::npos);
}

TEST(CsvFieldTest, QuotesWhenNeeded) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("a, b"), "\"a, b\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

}  // namespace
}  // namespace vogelcas::cli
