/*!
 * Copyright (c) 2026 The argudyn authors
 *
 * Permission is hereby granted, free of charge, to any person obtaining a copy
 * of this software and associated documentation files (the "Software"), to deal
 * in the Software without restriction, including without limitation the rights
 * to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the Software is
 * furnished to do so, subject to the following conditions:
 *
 * The above copyright notice and this permission notice shall be included in
 * all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
 * IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
 * FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT.  IN NO EVENT SHALL THE
 * AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
 * LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
 * OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
 * THE SOFTWARE.
 */

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>

#include "argudyn/io/cli.hpp"
#include "argudyn/random_af.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace argudyn;
using namespace argudyn::io;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> w;
  for (std::string s; in >> s;) w.push_back(s);
  return w;
}

// Runs the installed binary with DATA as working directory.
CliRun binary(const std::string& args) {
  const std::string command = "cd '" + fixtures::data("") + "' && '" + ARGUDYN_CLI_PATH + "' " +
                              args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() /
                   ("argudyn_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                    "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
  fs::create_directories(dir);
  return dir;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Apx, Examples) {
  const auto f = parse_apx("arg(a). arg(b). att(a,b).");
  EXPECT_EQ(f, ArgumentationFramework({"a", "b"}, {{"a", "b"}}));
  EXPECT_THROW(parse_apx("att(a,b)."), UndeclaredArgument);
  EXPECT_EQ(parse_apx("att(a,b).\narg(b).\narg(a).\n").names(),
            (std::vector<std::string>{"b", "a"}));
  EXPECT_EQ(parse_framework_file(fixtures::data("f1.apx")), fixtures::f1());
  EXPECT_EQ(parse_framework_file(fixtures::data("f2.apx")), fixtures::f2());
  EXPECT_EQ(parse_framework_file(fixtures::data("f3.apx")), fixtures::f3());
  EXPECT_EQ(parse_framework_file(fixtures::data("f4.apx")), fixtures::f4());
}

TEST(Apx, Errors) {
  try {
    parse_apx("arg(a).\n\narg(b) junk\n");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_apx("arg(a). arg(a)."), DuplicateArgument);
  EXPECT_THROW(parse_apx("arg(a-b)."), SyntaxError);
  EXPECT_THROW(parse_apx("arg(a). att(a,a,a)."), SyntaxError);
  EXPECT_THROW(parse_apx("arg(a)"), SyntaxError);
  EXPECT_NO_THROW(parse_apx("% only a comment\n\n"));
}

TEST(Apx, RoundTripOnRandomFrameworks) {
  std::mt19937_64 rng(2024);
  for (int round = 0; round < 100; ++round) {
    const auto f = random_framework(round % 16, 0.25, 0.1, rng);
    ASSERT_EQ(parse_apx(write_apx(f)), f) << write_apx(f);
    ASSERT_EQ(parse_tgf(write_tgf(f)), f) << write_tgf(f);
    ASSERT_EQ(parse_apx(write_apx(parse_tgf(write_tgf(f)))), f);
  }
}

TEST(Tgf, Examples) {
  const auto f = parse_tgf("1\n2\n#\n1 2");
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.attack_count(), 1u);
  EXPECT_TRUE(f.attacks(f.index_of("1"), f.index_of("2")));
  EXPECT_THROW(parse_tgf("1\n2\n1 2"), SyntaxError);
  EXPECT_THROW(parse_tgf("1\n#\n1 3"), UndeclaredArgument);
  EXPECT_THROW(parse_tgf("1\n1\n#\n"), DuplicateArgument);
  EXPECT_THROW(parse_tgf("1\n#\n1"), SyntaxError);
}

TEST(Tgf, MatchesApxOnConvertedFiles) {
  EXPECT_EQ(parse_framework_file(fixtures::data("f3.tgf")),
            parse_framework_file(fixtures::data("f3.apx")));
  for (const char* name : {"f1.apx", "f2.apx", "f3.apx", "f4.apx"}) {
    const auto f = parse_framework_file(fixtures::data(name));
    EXPECT_EQ(parse_tgf(write_tgf(f)), f) << name;
  }
}

TEST(Dimacs, Examples) {
  const auto phi = parse_dimacs_cnf("p cnf 1 2\n1 0\n-1 0");
  EXPECT_EQ(phi.variable_count(), 1);
  EXPECT_EQ(phi.clause_count(), 2u);
  EXPECT_FALSE(gadgets::sat_oracle(phi));
  EXPECT_THROW(parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0"), NotThreeCnfTwo);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 3\n1 0\n1 0\n1 0"), NotThreeCnfTwo);
  EXPECT_EQ(parse_dimacs_cnf("c comment\np cnf 2 1\n1 -2\n0\n"),
            gadgets::ThreeCnfTwoFormula(2, {{1, -2}}));
  EXPECT_FALSE(gadgets::sat_oracle(parse_dimacs_cnf(read_file(fixtures::data("unsat1.cnf")))));
  EXPECT_TRUE(gadgets::sat_oracle(parse_dimacs_cnf(read_file(fixtures::data("sat1.cnf")))));
}

TEST(Dimacs, Errors) {
  EXPECT_THROW(parse_dimacs_cnf("1 0"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 2\n1 0"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 1\n2 0"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 1 1\n1"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf x 1\n1 0"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p sat 1 1\n1 0"), SyntaxError);
}

TEST(Dimacs, RoundTrip) {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 50; ++round) {
    const int n = 1 + round % 5;
    const auto phi = gadgets::random_three_cnf_two(n, 1 + round % std::min(6, 4 * n), rng);
    EXPECT_EQ(parse_dimacs_cnf(phi.to_dimacs()), phi);
  }
}

TEST(SetList, ParsesAndJoins) {
  const auto f = fixtures::f4();
  EXPECT_EQ(parse_set_list(f, "c,a"), f.set_of({"a", "c"}));
  EXPECT_EQ(parse_set_list(f, ""), f.empty_set());
  EXPECT_EQ(join_names(f, f.set_of({"d", "b"})), "b,d");
  EXPECT_THROW(parse_set_list(f, "a,z"), InvalidInstance);
}

TEST(Files, MissingFileIsIoError) {
  EXPECT_THROW(read_file("/nonexistent/argudyn.apx"), IoError);
  EXPECT_THROW(write_file("/nonexistent/dir/out.apx", "x"), IoError);
}

// Each golden case is NAME.cmd (arguments relative to the data directory) and
// NAME.expected (first line "exit N", then stdout).
TEST(Cli, GoldenFiles) {
  std::size_t cases = 0;
  for (const auto& entry : fs::directory_iterator(ARGUDYN_TEST_GOLDEN)) {
    if (entry.path().extension() != ".cmd") continue;
    ++cases;
    const std::string args = lines_of(read_file(entry.path().string())).at(0);
    auto expected = lines_of(read_file(fs::path(entry.path()).replace_extension(".expected")));
    const int expected_code = std::stoi(expected.at(0).substr(5));
    expected.erase(expected.begin());

    std::vector<std::string> argv = words(args);
    for (auto& w : argv)
      if (w.ends_with(".apx") || w.ends_with(".tgf") || w.ends_with(".cnf")) w = fixtures::data(w);
    const auto in_process = cli(argv);
    EXPECT_EQ(in_process.code, expected_code) << entry.path();
    EXPECT_EQ(lines_of(in_process.out), expected) << entry.path();
    if (expected_code == 2) {
      EXPECT_EQ(lines_of(in_process.err).size(), 1u) << in_process.err;
      EXPECT_TRUE(in_process.err.starts_with("argudyn: "));
    }

    const auto external = binary(args);
    EXPECT_EQ(external.code, expected_code) << entry.path();
    EXPECT_EQ(lines_of(external.out), expected) << entry.path();
  }
  EXPECT_GE(cases, 10u);
}

TEST(Cli, AnswersMatchLibrary) {
  std::mt19937_64 rng(77);
  const auto dir = scratch_dir();
  for (int round = 0; round < 30; ++round) {
    const auto f = random_framework(2 + round % 5, 0.3, 0.1, rng);
    const auto path = (dir / "af.apx").string();
    write_file(path, write_apx(f));
    const Semantics sigma = kAllSemantics[round % kAllSemantics.size()];
    const int k = round % 3;
    const auto lib = solve(ProblemInstance::small(f, sigma, k));
    const auto r = cli({"solve", "small", "--af", path, "--semantics",
                        std::string(to_string(sigma)), "-k", std::to_string(k), "--format",
                        "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["answer"], lib.answer ? "YES" : "NO");
    if (lib.answer)
      EXPECT_EQ(j["witness"].get<std::vector<std::string>>(), f.names_of(*lib.witness));
    else
      EXPECT_TRUE(j["witness"].is_null());

    const auto listed = cli({"enumerate", "--af", path, "--semantics",
                             std::string(to_string(sigma))});
    std::vector<std::string> expected;
    for (const auto& e : enumerate(f, sigma).extensions) expected.push_back(braced(f, e));
    EXPECT_EQ(lines_of(listed.out), expected);
  }
}

TEST(Cli, JsonSchema) {
  const auto r = cli({"solve", "center", "--af", fixtures::data("f4.apx"), "--semantics", "stb",
                      "--e1", "a,c", "--e2", "b,d", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["answer"], "YES");
  EXPECT_EQ(j["witness"], nlohmann::json({"a", "d"}));
  EXPECT_EQ(j["stats"]["engine"], "delta");
  EXPECT_GE(j["stats"]["wall_ms"].get<double>(), 0.0);
  EXPECT_TRUE(j["stats"].contains("nodes"));
}

TEST(Cli, UsageErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"solve"},
           {"solve", "small", "--af", fixtures::data("f1.apx"), "--semantics", "xyz", "-k", "1"},
           {"solve", "small", "--af", fixtures::data("f1.apx"), "--semantics", "adm"},
           {"solve", "repair", "--af", fixtures::data("f1.apx"), "--semantics", "adm", "-k", "1",
            "--set", "q"},
           {"solve", "adjust", "--af", fixtures::data("f1.apx"), "--semantics", "adm", "-k", "1",
            "--e0", "a,b", "--target", "a"},
           {"solve", "small", "--af", fixtures::data("f1.apx"), "--semantics", "sem", "-k", "1",
            "--engine", "branching"},
           {"gen", "center", "--base-af", fixtures::data("f1.apx"), "-k", "3"},
           {"bench", "--suite", "nope", "--out", "/tmp/x.csv"},
       }) {
    const auto r = cli(args);
    EXPECT_EQ(r.code, 2) << ::testing::PrintToString(args);
    EXPECT_EQ(lines_of(r.err).size(), 1u) << r.err;
  }
}

TEST(Cli, FoRejectionCitesSemantics) {
  const auto r = cli({"solve", "repair", "--af", fixtures::data("f1.apx"), "--semantics", "prf",
                      "-k", "1", "--engine", "fo"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("prf"), std::string::npos) << r.err;
}

TEST(Cli, GenWritesFrameworkAndSideCar) {
  const auto dir = scratch_dir();
  const auto apx = (dir / "g.apx").string();
  auto r = cli({"gen", "cnf-small", "--cnf", fixtures::data("unsat1.cnf"), "--out", apx});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto f = parse_framework_file(apx);
  const auto side = nlohmann::json::parse(read_file(apx + ".json"));
  EXPECT_EQ(side["generator"], "cnf-small");
  EXPECT_EQ(side["arguments"], f.size());
  EXPECT_LE(side["max_degree"].get<std::size_t>(), 5u);
  EXPECT_EQ(f, gadgets::gen_cnf_small(parse_dimacs_cnf(read_file(fixtures::data("unsat1.cnf"))))
                   .framework);
  r = cli({"solve", "small", "--af", apx, "--semantics", "prf", "-k", "1"});
  EXPECT_EQ(lines_of(r.out), (std::vector<std::string>{"YES", "witness: {e}"}));

  const auto mcq = (dir / "m.apx").string();
  r = cli({"gen", "mcq", "--parts", "3", "--part-size", "2", "--seed", "4", "--out", mcq});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto again = (dir / "m2.apx").string();
  cli({"gen", "mcq", "--parts", "3", "--part-size", "2", "--seed", "4", "--out", again});
  EXPECT_EQ(read_file(mcq), read_file(again));

  const auto center = (dir / "c.apx").string();
  r = cli({"gen", "center", "--base-af", fixtures::data("f1.apx"), "-k", "2", "--out", center});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto c = nlohmann::json::parse(read_file(center + ".json"));
  const auto cf = parse_framework_file(center);
  for (const char* end : {"e1", "e2"})
    EXPECT_TRUE(is_extension(cf, cf.set_of(c[end].get<std::vector<std::string>>()),
                             Semantics::stb));
}

TEST(Bench, CsvRowsAndStability) {
  const auto dir = scratch_dir();
  const auto a = (dir / "a.csv").string();
  const auto b = (dir / "b.csv").string();
  auto r = cli({"bench", "--suite", "repair-k-sweep", "--out", a, "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  cli({"bench", "--suite", "repair-k-sweep", "--out", b, "--seed", "3"});
  const auto rows = lines_of(read_file(a));
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows[0], kBenchHeader);
  // 4 frameworks x 3 semantics x 5 values of k, with fo on the 4 smallest k.
  EXPECT_EQ(rows.size() - 1, 4u * 3u * (5u * 2u + 4u));

  auto without_time = [](const std::string& text) {
    std::vector<std::string> out;
    for (const auto& line : lines_of(text)) {
      std::vector<std::string> cells;
      std::istringstream in(line);
      for (std::string c; std::getline(in, c, ',');) cells.push_back(c);
      cells.at(10) = "";
      std::string joined;
      for (const auto& c : cells) joined += c + ",";
      out.push_back(joined);
    }
    return out;
  };
  EXPECT_EQ(without_time(read_file(a)), without_time(read_file(b)));
}

TEST(Bench, KSweepIsMonotone) {
  const auto report = run_bench("repair-k-sweep", 11);
  EXPECT_TRUE(report.ok()) << report.failures.front();
  std::map<std::string, std::vector<bool>> by_instance;
  for (const auto& rec : report.records) {
    if (rec.engine != Engine::delta) continue;
    by_instance[rec.instance_id.substr(0, rec.instance_id.rfind("-k"))].push_back(rec.answer);
  }
  EXPECT_EQ(by_instance.size(), 12u);
  for (const auto& [id, answers] : by_instance)
    EXPECT_TRUE(std::is_sorted(answers.begin(), answers.end())) << id;
}

TEST(Bench, UnwritablePathIsIoError) {
  EXPECT_THROW(run_bench("repair-k-sweep", 1, "/nonexistent/dir/out.csv"), IoError);
}
