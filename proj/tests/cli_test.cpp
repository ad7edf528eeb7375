#include "twocograph/cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace twocograph::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "twocograph");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Recognize) {
  const Result r = call({"recognize", "Dhc"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("cograph: NO"), std::string::npos);
  EXPECT_NE(r.out.find("2-cograph: NO (witness: 0 1 2 3 4)"), std::string::npos);

  const Result p4 = call({"recognize", "-", "--k", "3"}, "Ch\n");
  EXPECT_EQ(p4.code, kExitOk);
  EXPECT_NE(p4.out.find("2-cograph: YES"), std::string::npos);
  EXPECT_NE(p4.out.find("3-cograph: YES"), std::string::npos);
}

TEST(Cli, Decompose) {
  const Result r = call({"decompose", "Bw"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("tree: ", 0), 0u);
  EXPECT_NE(r.out.find("labels:"), std::string::npos);
  EXPECT_NE(call({"decompose", "Dhc"}).out.find("witness: 0 1 2 3 4"), std::string::npos);
}

TEST(Cli, Minimal) {
  const Result c5 = call({"minimal", "Dhc"});
  EXPECT_NE(c5.out.find("minimal non-2-cograph: YES"), std::string::npos);
  EXPECT_NE(c5.out.find("in class: YES"), std::string::npos);
  const Result c6 = call({"minimal", "EhEG"});
  EXPECT_NE(c6.out.find("minimal non-2-cograph: NO"), std::string::npos);
  EXPECT_NE(c6.out.find("contract"), std::string::npos);
}

TEST(Cli, EnumerateWritesJson) {
  const Result r = call({"enumerate", "--order", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["members_total"], 1);
  EXPECT_TRUE(are_isomorphic(parse_graph6(doc["representatives"][0].get<std::string>()), cycle_graph(5)));

  const auto dir = std::filesystem::temp_directory_path();
  const auto input = dir / "twocograph_cli_input.g6";
  const auto members = dir / "twocograph_cli_members.g6";
  {
    std::ofstream f(input);
    f << "Dhc\nD~{\nDhc\n";
  }
  const Result from_file = call({"enumerate", "--order", "5", "--input", input.string(), "--emit-g6", members.string()});
  ASSERT_EQ(from_file.code, kExitOk) << from_file.err;
  EXPECT_EQ(nlohmann::json::parse(from_file.out)["members_total"], 1);
  std::ifstream m(members);
  std::string line;
  ASSERT_TRUE(std::getline(m, line));
  EXPECT_EQ(line.size(), 3u);
  std::filesystem::remove(input);
  std::filesystem::remove(members);
}

TEST(Cli, Iso) {
  EXPECT_EQ(call({"iso", "Dhc", "DUW"}).out, "isomorphic\n");
  EXPECT_EQ(call({"iso", "Dhc", "D~{"}).out, "not isomorphic\n");
}

TEST(Cli, Dot) {
  const Result r = call({"dot", "Bw", "--green-red"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("color=green"), std::string::npos);
}

TEST(Cli, BadInputExitsTwo) {
  const Result r = call({"recognize", "D!c"});
  EXPECT_EQ(r.code, kExitBadInput);
  EXPECT_NE(r.err.find("byte 1"), std::string::npos);
  EXPECT_EQ(call({"recognize"}).code, kExitBadInput);
  EXPECT_EQ(call({"frobnicate"}).code, kExitBadInput);
  EXPECT_EQ(call({"enumerate", "--order", "11"}).code, kExitBadInput);
  EXPECT_EQ(call({"enumerate", "--order", "5", "--input", "/nonexistent/x.g6"}).code, kExitBadInput);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

TEST(Cli, VerifySmallOrders) {
  const Result r = call({"verify", "--max-order", "6"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  EXPECT_EQ(lines, 11u);
}

}  // namespace
}  // namespace twocograph::cli
