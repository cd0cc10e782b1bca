#include "cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bidx/canonical.h"
#include "bidx/families.h"
#include "bidx/graph6.h"
#include "json.hpp"

namespace bidx::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliTest, ComputeExamples) {
  Outcome r = Call({"compute", "--index", "chi", "--alpha", "2", "--graph6", "Bw"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "48\n");
  r = Call({"compute", "--index", "m1", "--graph6", "Bw", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NO_THROW(nlohmann::json::parse(r.out));
}

TEST(CliTest, ComputeFromEdgeListFile) {
  const auto path = std::filesystem::temp_directory_path() / "bidx_cli_p4.txt";
  {
    std::ofstream f(path);
    f << "n=4\n0 1\n1 2\n2 3\n";
  }
  const Outcome r = Call({"compute", "--index", "m1", "--in", path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "10\n");
  std::filesystem::remove(path);
}

TEST(CliTest, SearchFindsSPlus) {
  const Outcome r = Call({"search", "--index", "sei", "--a", "2", "--n", "6",
                          "--m", "6", "--format", "graph6"});
  ASSERT_EQ(r.code, kExitOk);
  std::string line = r.out.substr(0, r.out.find('\n'));
  EXPECT_TRUE(AreIsomorphic(DecodeGraph6(line),
                            MakeFamily({FamilyTag::kSPlus, 6})));
}

TEST(CliTest, SearchIsDeterministicAcrossWorkers) {
  const std::vector<std::string> base{"search", "--index", "chi", "--alpha",
                                      "1.5", "--n-min", "4", "--n-max", "7",
                                      "--format", "csv"};
  std::vector<std::string> one = base, many = base;
  one.insert(one.end(), {"--workers", "1"});
  many.insert(many.end(), {"--workers", "4"});
  const Outcome a = Call(one);
  const Outcome b = Call(many);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, WorkersFromEnvironment) {
  ::setenv("BIDX_WORKERS", "3", 1);
  const Outcome r = Call({"enumerate", "--n", "6", "--m", "7"});
  ::unsetenv("BIDX_WORKERS");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 19);
}

TEST(CliTest, VerifyExitCodes) {
  Outcome r = Call({"verify", "--theorem", "thm2", "--alphas", "1,1.5,2,3",
                    "--n-min", "5", "--n-max", "7"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  r = Call({"verify", "--conditions", "--index", "chi", "--alpha", "0.5"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  r = Call({"verify", "--conditions", "--index", "chi", "--alpha", "2"});
  EXPECT_EQ(r.code, kExitOk);
}

TEST(CliTest, FamiliesAndEnumerate) {
  Outcome r = Call({"families", "--n", "6", "--family", "G4", "--format", "graph6"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(AreIsomorphic(DecodeGraph6(r.out.substr(0, r.out.find('\n'))),
                            MakeFamily({FamilyTag::kG4, 6})));
  r = Call({"enumerate", "--n", "8", "--k", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
}

TEST(CliTest, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "bidx_cli_out.txt";
  const Outcome r = Call({"enumerate", "--n", "5", "--m", "4", "--out",
                          path.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  const std::string text((std::istreambuf_iterator<char>(f)), {});
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  std::filesystem::remove(path);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Call({"compute", "--index", "chi", "--alpha", "2", "--graph6", "B\x01"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"search", "--index", "chi", "--alpha", "2", "--n", "4", "--m", "9"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Call({"compute", "--index", "nope", "--graph6", "Bw"}).code, kExitUsage);
  EXPECT_EQ(Call({"compute", "--index", "chi", "--alpha", "2"}).code, kExitUsage);
  EXPECT_EQ(Call({"search", "--index", "chi", "--alpha", "2", "--n", "5", "--m",
                  "5", "--format", "yaml"}).code,
            kExitUsage);
  EXPECT_EQ(Call({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace bidx::cli
