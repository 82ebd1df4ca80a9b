#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <evenodd/cli.hpp>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = evenodd::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("evenodd_cli_" + name)).string();
}

const std::string kFixtures = EVENODD_FIXTURE_DIR;

}  // namespace

TEST(Cli, FormulaValue) {
  const auto r = run({"formula", "thm2", "--k", "2", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(run({"formula", "thm4", "--k", "2", "--n", "8", "--m", "2"}).out, "1\n");
  EXPECT_EQ(run({"formula", "thm4bar", "--k", "2", "--n", "2", "--m", "1"}).out, "-2\n");
  EXPECT_EQ(run({"formula", "cor-rs", "--n", "2", "--r", "3", "--s", "1"}).out, "1\n");
  EXPECT_EQ(run({"formula", "cor-period", "--n", "7", "--r", "2"}).out, "-1\n");
  EXPECT_EQ(run({"formula", "munagi", "--k", "2", "--n", "5", "--format", "csv"}).out, "formula,n,value\nmunagi,5,5\n");
}

TEST(Cli, SignedRestatesSize) {
  // --n is the theorem index; the class of n=4 lives on size 5
  EXPECT_EQ(run({"signed", "--class", "minpart", "--k", "2", "--n", "4"}).out, "odd=1 even=2 diff=-1 size=5\n");
  EXPECT_EQ(run({"signed", "--class", "minpart", "--k", "2", "--size", "5"}).out, "odd=1 even=2 diff=-1 size=5\n");
  EXPECT_EQ(run({"signed", "--class", "minpart", "--k", "2", "--n", "5"}).out, "odd=2 even=3 diff=-1 size=6\n");
  EXPECT_EQ(run({"signed", "--class", "distinct", "--n", "5"}).out, "odd=1 even=4 diff=-3 size=5\n");
  EXPECT_EQ(run({"signed", "--class", "all", "--n", "0", "--format", "csv"}).out,
            "class,size,odd,even,diff\n\"all\",0,0,1,-1\n");
}

TEST(Cli, Count) {
  EXPECT_EQ(run({"count", "--class", "all", "--n", "4"}).out, "count=8 size=4\n");
  EXPECT_EQ(run({"count", "--class", "first-kind", "--k", "2", "--m", "1", "--n", "5"}).out, "count=2 size=5\n");
  EXPECT_EQ(run({"count", "--class", "guarded", "--k", "2", "--m", "1", "--n", "5"}).out, "count=2 size=6\n");
  EXPECT_EQ(run({"count", "--class", "congruent", "--k", "4", "--r", "2", "--n", "7"}).out, "count=3 size=10\n");
}

TEST(Cli, Series) {
  EXPECT_EQ(run({"series", "thm2", "--k", "2", "--order", "7"}).out, "1 0 -1 -1 0 1 1 0\n");
  EXPECT_EQ(run({"series", "rational", "--num", "1", "--den", "1,-1", "--order", "4"}).out, "1 1 1 1 1\n");
  EXPECT_EQ(run({"series", "pentagonal", "--order", "7"}).out, "1 -1 -1 0 0 1 0 1\n");
  EXPECT_EQ(run({"series", "cor-period", "--r", "1", "--order", "3", "--format", "bfile"}).out, "0 1\n1 0\n2 -1\n3 -1\n");
  EXPECT_EQ(run({"series", "thm3", "--k", "2", "--r", "3", "--s", "1", "--order", "4", "--format", "csv"}).out,
            "power,coefficient\n0,1\n1,0\n2,0\n3,-1\n4,0\n");
  EXPECT_EQ(run({"series", "thm4bar", "--k", "2", "--order", "3", "--y-order", "1"}).out,
            "y^0: 1 0 -1 -1\ny^1: 0 -1 0 2\n");
  EXPECT_EQ(run({"series", "thm4bar", "--k", "2", "--order", "3", "--format", "bfile"}).code, 2);
  EXPECT_EQ(run({"series", "rational", "--num", "1", "--den", "2,1", "--order", "4"}).code, 2);
}

TEST(Cli, VerifyExitCodes) {
  const auto r = run({"verify", "thm3", "--max-n", "18"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("status: pass"), std::string::npos);
  EXPECT_NE(r.out.find("k=1..6"), std::string::npos);
  const auto csv = run({"verify", "legendre", "--max-n", "10", "--format", "csv", "--jobs", "2"});
  EXPECT_EQ(csv.out, "theorem,ranges,instances,status,params,expected,actual\nlegendre,\"n=0..10\",11,pass,,,\n");
}

TEST(Cli, Period) {
  EXPECT_EQ(run({"period", "--seq", "thm1", "--max-n", "60"}).out, "preperiod=0 period=6 window=1..60\n");
  EXPECT_EQ(run({"period", "--seq", "thm2", "--k", "3", "--max-n", "60"}).out, "aperiodic within window 1..60\n");
  EXPECT_EQ(run({"period", "--seq", "cor-period", "--r", "3", "--max-n", "108", "--format", "csv"}).out,
            "sequence,first,last,preperiod,period\ncor-period,1,108,0,18\n");
}

TEST(Cli, BFileEmitAndCheck) {
  EXPECT_EQ(run({"bfile", "emit", "--seq", "thm2", "--k", "2", "--offset", "1", "--max-n", "6"}).out,
            "1 1\n2 1\n3 0\n4 -1\n5 -1\n6 0\n");
  const auto ok = run({"bfile", "check", "--seq", "thm2", "--k", "2", "--file", kFixtures + "/a010892.txt"});
  EXPECT_EQ(ok.code, 0) << ok.err;
  EXPECT_EQ(ok.out, "match: indices 1..60\n");
  EXPECT_EQ(run({"bfile", "check", "--seq", "distinct-signed", "--file", kFixtures + "/a339435.txt"}).code, 0);

  const std::string path = temp_path("mismatch.txt");
  {
    std::ofstream f(path);
    f << "# planted\n1 1\n2 1\n3 1\n";
  }
  const auto bad = run({"bfile", "check", "--seq", "thm1", "--file", path});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "mismatch at index 3: b-file=1 computed=0\n");

  const std::string emitted = temp_path("emitted.txt");
  EXPECT_EQ(run({"bfile", "emit", "--seq", "legendre", "--max-n", "30", "--file", emitted}).code, 0);
  EXPECT_EQ(run({"bfile", "check", "--seq", "legendre", "--file", emitted}).code, 0);

  {
    std::ofstream f(path);
    f << "1 1\n1 2\n";
  }
  const auto malformed = run({"bfile", "check", "--seq", "thm1", "--file", path});
  EXPECT_EQ(malformed.code, 2);
  EXPECT_NE(malformed.err.find("line 2"), std::string::npos) << malformed.err;
  std::remove(path.c_str());
  std::remove(emitted.c_str());
}

TEST(Cli, UsageErrors) {
  const auto none = run({});
  EXPECT_EQ(none.code, 2);
  EXPECT_NE(none.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"formula", "thm2", "--k", "2", "--n", "4", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "thm9"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "nope", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "minpart", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"count", "--class", "all", "--n", "3", "--size", "3"}).code, 2);
  EXPECT_EQ(run({"period", "--seq", "thm1"}).code, 2);
  EXPECT_EQ(run({"bfile", "check", "--seq", "thm1"}).code, 2);
  EXPECT_EQ(run({"bfile", "check", "--seq", "thm1", "--file", temp_path("absent.txt")}).code, 2);
}

TEST(Cli, ParameterViolationsNameTheInvariant) {
  const auto r = run({"formula", "thm3", "--k", "2", "--n", "3", "--r", "2", "--s", "2"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("s"), std::string::npos);
  EXPECT_NE(r.err.find("r"), std::string::npos);
  const auto k = run({"formula", "cor-period", "--k", "3", "--n", "3", "--r", "2"});
  EXPECT_EQ(k.code, 2);
  EXPECT_NE(k.err.find("k = 2r - s"), std::string::npos) << k.err;
  const auto n = run({"formula", "thm2", "--k", "2", "--n", "0"});
  EXPECT_NE(n.err.find("n must be >= 1"), std::string::npos) << n.err;
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}
