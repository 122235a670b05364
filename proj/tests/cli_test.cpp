#include <bipartite/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace bipartite::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

// Runs the real executable; returns stdout and the exit status.
Outcome exec(const std::string& args) {
  const std::string cmd = std::string(BIPCOUNT_EXE) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string text;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) text.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text, {}};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bipcount_test_" + name);
}

TEST(Cli, CountRecord) {
  const Outcome o = call({"count", "--family", "x", "--n", "3", "--r", "2"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "{\"family\":\"x\",\"n\":3,\"r\":2,\"count\":\"25\",\"method\":\"recurrence\"}\n");
}

TEST(Cli, CountMethods) {
  EXPECT_NE(call({"count", "--family", "u", "--n", "3", "--r", "3"}).out.find("\"closed-form\""),
            std::string::npos);
  EXPECT_NE(call({"count", "--family", "u", "--n", "5", "--r", "5"}).out.find("\"burnside\""),
            std::string::npos);
  const Outcome brute = call({"count", "--family", "xy", "--n", "3", "--r", "3", "--method", "brute"});
  EXPECT_NE(brute.out.find("\"count\":\"108\",\"method\":\"brute-force\""), std::string::npos);
  const Outcome formula = call({"count", "--family", "x", "--n", "4", "--r", "4", "--method", "formula"});
  EXPECT_EQ(formula.code, 2);
  EXPECT_NE(formula.err.find("no closed form"), std::string::npos);
  EXPECT_EQ(call({"count", "--family", "x", "--n", "4", "--r", "4", "--method", "burnside"}).out,
            "{\"family\":\"x\",\"n\":4,\"r\":4,\"count\":\"609\",\"method\":\"burnside\"}\n");
}

TEST(Cli, CountErrors) {
  EXPECT_EQ(call({"count", "--family", "q", "--n", "3", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"count", "--family", "x", "--n", "-1", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"count", "--family", "x", "--n", "3"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  const Outcome big = call({"count", "--family", "u", "--n", "5", "--r", "5", "--method", "brute"});
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.err.find("exceeds"), std::string::npos);
}

TEST(Cli, Bounds) {
  const Outcome u = call({"bounds", "--family", "u", "--n", "2", "--r", "3"});
  EXPECT_EQ(u.code, 0);
  EXPECT_NE(u.out.find("\"lower\":\"10\""), std::string::npos) << u.out;
  EXPECT_NE(u.out.find("\"upper\":\"20\""), std::string::npos);
  EXPECT_NE(u.out.find("\"exact\":\"13\""), std::string::npos);
  const Outcome x = call({"bounds", "--family", "x", "--n", "2", "--r", "3"});
  EXPECT_NE(x.out.find("\"8\""), std::string::npos) << x.out;
  EXPECT_NE(x.out.find("\"31\""), std::string::npos);
  EXPECT_NE(x.out.find("\"upper\":null"), std::string::npos);
  const Outcome y = call({"bounds", "--family", "y", "--n", "2", "--r", "3"});
  EXPECT_EQ(y.code, 2);
  EXPECT_NE(y.err.find("family y"), std::string::npos);
}

TEST(Cli, TableCsv) {
  const Outcome x = call({"table", "--family", "x", "--n", "2", "--r", "1..3"});
  EXPECT_EQ(x.code, 0);
  EXPECT_EQ(x.out,
            "family,n,r,count,method\n"
            "x,2,1,4,recurrence\nx,2,2,9,recurrence\nx,2,3,16,recurrence\n");
  const Outcome u = call({"table", "--family", "u", "--n", "1", "--r", "0..4"});
  EXPECT_EQ(u.out,
            "family,n,r,count,method\n"
            "u,1,0,1,closed-form\nu,1,1,2,closed-form\nu,1,2,3,closed-form\n"
            "u,1,3,4,closed-form\nu,1,4,5,closed-form\n");
}

TEST(Cli, TableJson) {
  const Outcome xy = call({"table", "--family", "xy", "--n", "1..3", "--r", "2", "--format", "json"});
  EXPECT_EQ(xy.code, 0);
  const auto rows = json::parse(xy.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["count"], "4");
  EXPECT_EQ(rows[1]["count"], "12");
  EXPECT_EQ(rows[2]["count"], "32");
  EXPECT_EQ(rows[2]["method"], "recurrence");
}

TEST(Cli, TableBruteErrorsPerCell) {
  const Outcome o = call({"table", "--family", "u", "--n", "4..5", "--r", "4", "--method", "brute"});
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("u,4,4,317,brute-force"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("u,5,4,ERROR:"), std::string::npos) << o.out;
  const Outcome all_bad = call({"table", "--family", "u", "--n", "5", "--r", "5", "--method", "brute"});
  EXPECT_EQ(all_bad.code, 2);
  EXPECT_EQ(call({"table", "--family", "u", "--n", "3..1", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"table", "--family", "u", "--n", "1", "--r", "2", "--format", "xml"}).code, 2);
}

TEST(Cli, TableOutputFile) {
  const auto path = temp_file("table.csv");
  const Outcome o = call({"table", "--family", "x", "--n", "2", "--r", "1..3", "--output", path.string()});
  EXPECT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("x,2,3,16,recurrence"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, ConfigFile) {
  const auto path = temp_file("count.conf");
  {
    std::ofstream f(path);
    f << "# count a cell\nfamily = xy\nn=3\n\nr = 2\n";
  }
  const Outcome o = call({"count", "--config", path.string()});
  EXPECT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("\"count\":\"32\""), std::string::npos);
  // Command-line flags win over the file.
  const Outcome over = call({"count", "--config", path.string(), "--n", "2"});
  EXPECT_NE(over.out.find("\"count\":\"12\""), std::string::npos) << over.out;
  std::filesystem::remove(path);
  EXPECT_EQ(call({"count", "--config", path.string()}).code, 2);
}

TEST(Cli, DumpClasses) {
  const Outcome o = call({"dump-classes", "--family", "x", "--n", "2", "--r", "2"});
  EXPECT_EQ(o.code, 0);
  std::stringstream lines(o.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    const auto j = json::parse(line);
    EXPECT_TRUE(j["supportRows"].is_array());
    EXPECT_TRUE(j["supportCols"].is_null());
    ++rows;
  }
  EXPECT_EQ(rows, 9);
  EXPECT_EQ(o.out.substr(0, o.out.find('\n')),
            "{\"family\":\"x\",\"n\":2,\"r\":2,\"supportRows\":[],\"supportCols\":null,\"bits\":\"0000\"}");
}

TEST(Cli, Verify) {
  EXPECT_EQ(call({"verify", "--max-bits", "4", "--cases", "50"}).code, 0);
  const Outcome bad = call({"verify", "--max-bits", "6", "--cases", "50", "--perturb", "x,3,2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("x(3,2)"), std::string::npos);
  EXPECT_EQ(call({"verify", "--perturb", "x,3"}).code, 2);
}

TEST(Executable, ExitCodesAndDeterminism) {
  const Outcome a = exec("table --family xy --n 0..6 --r 0..6 --format json");
  const Outcome b = exec("table --family xy --n 0..6 --r 0..6 --format json --workers 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(exec("dump-classes --family xy --n 3 --r 3 --workers 1").out,
            exec("dump-classes --family xy --n 3 --r 3 --workers 4").out);
  EXPECT_EQ(exec("bounds --family y --n 2 --r 3").code, 2);
  EXPECT_EQ(exec("count --family x --n 3 --r 2").out,
            "{\"family\":\"x\",\"n\":3,\"r\":2,\"count\":\"25\",\"method\":\"recurrence\"}\n");
  EXPECT_EQ(exec("--help").code, 0);
}

}  // namespace
}  // namespace bipartite::cli
