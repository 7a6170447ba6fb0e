#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "ykh_cli.hpp"

namespace {
struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = ykh::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST(Cli, InvariantTrefoil) {
  auto r = run({"invariant", "--d", "3", "--subset", "0,1", "--braid", "1 1 1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("2: 1 1 1 => sqrtLambda^0 * (", 0), 0u) << r.out;
}

TEST(Cli, UnknotAndTwoComponentUnlink) {
  auto one = run({"invariant", "--d", "1", "--subset", "0", "--braid", "1:"});
  EXPECT_EQ(one.out, "1: => sqrtLambda^0 * ((1) / (1))\n");
  auto unlink = run({"invariant", "--d", "1", "--subset", "0", "--braid", "2:"});
  EXPECT_EQ(unlink.out, "2: => sqrtLambda^1 * ((u) / (z + u - 1))\n");
}

TEST(Cli, EsystemEnumerate) {
  auto r = run({"esystem", "--d", "3", "--enumerate"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 7);
  EXPECT_EQ(r.out.find("NOT"), std::string::npos);
  EXPECT_NE(r.out.find("{0,1,2} mod 3: zeta = 1/3, x = (1, 0, 0), verified"), std::string::npos) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"invariant", "--d", "2", "--subset", "0", "--braid", "1 x"}).code, 1);
  EXPECT_EQ(run({"invariant", "--d", "2", "--subset", "5", "--braid", "1"}).code, 1);
  EXPECT_EQ(run({"invariant", "--d", "2", "--subset", "0"}).code, 1);
  EXPECT_EQ(run({"invariant", "--d", "0", "--subset", "0", "--braid", "1"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 1);
  EXPECT_EQ(run({"adelic", "--chain", "2,5", "--subset", "0", "--braid", "1"}).code, 2);
  EXPECT_EQ(run({"adelic", "--chain", "2;4", "--subset", "0", "--braid", "1"}).code, 1);
  EXPECT_EQ(run({"invariant", "--d", "2", "--subset", "0", "--braid", "12: 1"}).code, 2);
  EXPECT_EQ(run({"invariant", "--d", "2", "--subset", "0", "--braid", "1", "--u", "2"}).code, 1);
  EXPECT_EQ(run({"invariant", "--d", "2", "--subset", "0", "--braid", "1", "--format", "xml"}).code, 1);
}

TEST(Cli, ParseErrorsMentionPosition) {
  auto r = run({"trace", "--d", "2", "--braid", "3: 1 4"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("position 5"), std::string::npos) << r.err;
}

TEST(Cli, CorpusSkipsBadRecordsInOrder) {
  std::string path = ::testing::TempDir() + "cli_corpus.txt";
  {
    std::ofstream f(path);
    f << "trefoil;1 1 1\nbad;1 0\nhopf;1 1\ntoo wide; 12: 1\n";
  }
  auto r = run({"trace", "--d", "1", "--corpus", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.find("trefoil"), 0u);
  EXPECT_NE(r.out.find("\nhopf"), std::string::npos);
  EXPECT_EQ(r.out.find("bad"), std::string::npos);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
  EXPECT_NE(r.err.find("too wide"), std::string::npos);
}

TEST(Cli, NumericEvaluationIsLabeled) {
  auto r = run({"invariant", "--d", "1", "--subset", "0", "--braid", "1 1", "--u", "2", "--z", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("approx at u=2 + 0i, z=3 + 0i: -0.272165526976"), std::string::npos) << r.out;
}

TEST(Cli, ComplexParsing) {
  using ykh::cli::parse_complex;
  EXPECT_EQ(parse_complex("1.5"), std::complex<double>(1.5, 0));
  EXPECT_EQ(parse_complex("1,2"), std::complex<double>(1, 2));
  EXPECT_EQ(parse_complex("2i"), std::complex<double>(0, 2));
  EXPECT_EQ(parse_complex("1-i"), std::complex<double>(1, -1));
  EXPECT_EQ(parse_complex("1e-3+2i"), std::complex<double>(1e-3, 2));
  EXPECT_THROW(parse_complex("abc"), ykh::cli::ValidationError);
}

TEST(Cli, JsonIsExactAndParsable) {
  auto r = run({"invariant", "--d", "4", "--subset", "1", "--braid", "1 1 1", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["value"]["zeta"], "1/1");
  EXPECT_EQ(j[0]["value"]["sqrtLambda"], 0);
  for (const auto& term : j[0]["value"]["body"]["numerator"]) EXPECT_EQ(term["coeff"].size(), 2u);
}

TEST(Cli, VerifyIsDeterministic) {
  auto a = run({"verify", "--suite", "skein", "--seed", "42", "--samples", "3"});
  auto b = run({"verify", "--suite", "skein", "--seed", "42", "--samples", "3"});
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AdelicOutputsJsonArray) {
  auto r = run({"adelic", "--chain", "2,4", "--subset", "0", "--braid", "1 1 1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["levels"].size(), 2u);
}
