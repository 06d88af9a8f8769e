#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
  std::string cmd = std::string(NCHT_CLI_PATH) + " " + args + " 2>/dev/null";
  std::filesystem::path input;
  if (!stdin_text.empty()) {
    input = std::filesystem::temp_directory_path() / ("ncht_cli_" + std::to_string(::getpid()) + ".json");
    std::ofstream(input) << stdin_text;
    cmd += " < " + input.string();
  }
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (!input.empty()) std::filesystem::remove(input);
  return r;
}

const char* kRunningTree = R"({"n":9,"edges":[[1,3],[2,3],[3,4,5],[5,6],[5,7,8,9]]})";

}  // namespace

TEST(Cli, FVectorRowsJson) {
  auto r = run("table1 --max-n 6");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[4]["f"], json::parse("[1,35,350,1400,2380,1428]"));
  EXPECT_EQ(j[4]["reduced_euler"], 132);
}

TEST(Cli, CountRowsUseFormulaBeyondTheCap) {
  auto r = run("table2 --n 9");
  ASSERT_EQ(r.code, 0);
  auto row = json::parse(r.out)[0];
  EXPECT_EQ(row["ncht_vertices"], 80);
  EXPECT_EQ(row["ncht_chambers"], 246675);
  EXPECT_EQ(row["ncpl_vertices"], 16794);
  EXPECT_EQ(row["ncpl_chambers"], 100000000);
  EXPECT_EQ(row["enumerated"], false);
  auto small = json::parse(run("table2 --n 5").out)[0];
  EXPECT_EQ(small["ncpl_vertices"], 130);
  EXPECT_EQ(small["ncpl_chambers"], 1296);
  EXPECT_EQ(small["enumerated"], true);
}

TEST(Cli, CountCsv) {
  auto r = run("count --n 3 --format csv");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n,dimension,count\n3,-1,1\n3,0,8\n3,1,12\n");
}

TEST(Cli, EnumerateRoundTrips) {
  auto r = run("enumerate --n 4 --edges 2");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j.size(), 15u);
  for (const auto& t : j) EXPECT_EQ(t["edges"].size(), 2u);
}

TEST(Cli, DissectBothWays) {
  auto there = run("dissect -", kRunningTree);
  ASSERT_EQ(there.code, 0);
  auto d = json::parse(there.out);
  EXPECT_EQ(d["k"], 9);
  EXPECT_EQ(d["diagonals"].size(), 4u);
  auto back = run("dissect -", there.out);
  ASSERT_EQ(back.code, 0);
  EXPECT_EQ(json::parse(back.out), json::parse(kRunningTree));
}

TEST(Cli, StandardizeWorkedCase) {
  auto r = run("standardize -", R"({"n":9,"edges":[[3,4,5],[5,6],[2,3],[1,3],[5,7,8,9]]})");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["factorization"], json::parse(R"j(["(3,4,5)","(3,6)","(2,3)","(1,2)","(1,7,8,9)"])j"));
  EXPECT_EQ(j["proper"], true);
  // Proper input comes back unchanged.
  auto again = run("standardize -", r.out);
  EXPECT_EQ(json::parse(again.out)["edges"], j["edges"]);
}

TEST(Cli, SphereReport) {
  auto r = run("sphere -", R"({"n":5,"edges":[[1,2],[2,3],[3,4],[4,5]]})");
  ASSERT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["chamber_count"], 24);
  EXPECT_EQ(j["tree_chamber_count"], 14);
  EXPECT_EQ(j["classification"], "caterpillar");
}

TEST(Cli, VerifyExitCodes) {
  auto ok = run("verify duality --n 4");
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(json::parse(ok.out)[0]["passed"], true);
  EXPECT_EQ(run("verify duality --n 7").code, 3);
  EXPECT_EQ(run("verify nonsense --n 3").code, 2);
}

TEST(Cli, BadInputExitCodes) {
  EXPECT_EQ(run("dissect -", "{not json").code, 2);
  EXPECT_EQ(run("dissect -", R"({"n":4,"edges":[[1,3],[2,4]]})").code, 2);
  EXPECT_EQ(run("sphere -", R"({"n":4,"edges":[[1,2],[2,3],[1,3]]})").code, 2);
  EXPECT_EQ(run("dissect /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("count --format xml").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, CapsAndForce) {
  EXPECT_EQ(run("enumerate --n 9").code, 3);
  EXPECT_EQ(run("table1 --max-n 9").code, 3);
}

TEST(Cli, Deterministic) {
  EXPECT_EQ(run("enumerate --n 5 --format csv").out, run("enumerate --n 5 --format csv").out);
  EXPECT_EQ(run("table1 --format ascii").out, run("table1 --format ascii").out);
}
