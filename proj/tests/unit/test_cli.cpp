#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(FROBKIT_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Cli, XiExhaustive) {
  auto r = run("xi --p 3 --n 2 --exhaustive");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("48/48 pass"), std::string::npos);
}

TEST(Cli, TauPerez) {
  auto r = run("tau --p 3 --vars x,y --pair \"x+y:1/3\" --pair \"x*y:2/3\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("basis: [y, x]"), std::string::npos) << r.out;
}

TEST(Cli, JsonSchema) {
  auto r = run("--json bracket-root --p 3 --e 2 --gens \"x^8*y^8\"");
  EXPECT_EQ(r.code, 0);
  for (const char* key : {"\"p\"", "\"vars\"", "\"command\"", "\"result\"", "\"hash\""}) {
    EXPECT_NE(r.out.find(key), std::string::npos) << key;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("no-such-command").code, 1);
  EXPECT_EQ(run("tau --p 4 --pair x:1").code, 1);
  EXPECT_EQ(run("tau --p 3 --pair \"x+:1\"").code, 1);
  EXPECT_EQ(run("xi --p 3 --n 2").code, 1);
}

TEST(Cli, RasterCsvAndManifestDeterminism) {
  const std::string base = "raster --p 3 --pair x+y --pair x*y --T 1 --depth 2";
  auto a = run(base);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 101);
  auto b = run(base + " --jobs 3");
  EXPECT_EQ(a.out, b.out);
  const std::string files = " --out cli_r.csv --svg cli_r.svg --staircase 2 --manifest ";
  EXPECT_EQ(run(base + files + "cli_m1.json").code, 0);
  EXPECT_EQ(run(base + files + "cli_m2.json").code, 0);
  // The command line names the manifest path and the wall clock varies.
  auto normalized = [](const std::string& path) {
    std::istringstream in(slurp(path));
    std::string line, out;
    while (std::getline(in, line)) {
      if (line.find("command_line") == std::string::npos && line.find("wall_clock_ms") == std::string::npos) {
        out += line + "\n";
      }
    }
    return out;
  };
  EXPECT_EQ(normalized("cli_m1.json"), normalized("cli_m2.json"));
  const auto m1 = slurp("cli_m1.json");
  EXPECT_NE(m1.find("cli_r.csv"), std::string::npos);
  EXPECT_NE(m1.find("cli_r.svg"), std::string::npos);
  EXPECT_NE(slurp("cli_r.svg").find("viewBox=\"0 0 600 600\""), std::string::npos);
}

TEST(Cli, OtherCommands) {
  auto d = run("decompose --p 3 --e 1 --poly \"x^5*y^2\"");
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.out, "(2,2): x\n");
  EXPECT_EQ(run("fpt --p 3 --vars x,y --fixed \"x+y:1/3\" --free \"x*y\" --depth 6").code, 0);
  EXPECT_EQ(run("jumps --p 3 --free x*y --T 1 --depth 2").code, 0);
  EXPECT_EQ(run("sigma --p 3 --alg 1:x^3").out.rfind("basis: [x]\n", 0), 0u);
  EXPECT_EQ(run("pullback-check --p 3 --base t --fiber x,y --pair \"t*(t+1):2/3\" --sigma").code, 0);
  EXPECT_EQ(run("xi-comb --p 3 --n 2").code, 0);
  auto bc = run("basis-change --p 3 --laurent --old x --new \"x^-1\"");
  EXPECT_EQ(bc.code, 0);
  EXPECT_NE(bc.out.find("xi: x^-4"), std::string::npos);
  auto st = run("staircase --p 3 --depth 1");
  EXPECT_NE(st.out.find("series partial sum: 1/2"), std::string::npos);
}

}  // namespace
