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

#pragma once

#include <cmath>
#include <cstddef>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "argudyn/errors.hpp"
#include "argudyn/gadgets/generators.hpp"
#include "argudyn/io/formats.hpp"
#include "argudyn/random_af.hpp"
#include "argudyn/solve.hpp"

namespace argudyn::io {

struct BenchRecord {
  std::string instance_id;
  std::string generator;
  std::string params;
  ProblemKind kind = ProblemKind::small;
  Semantics semantics = Semantics::adm;
  int k = 0;
  std::size_t n = 0;
  std::size_t max_degree = 0;
  bool answer = false;
  Engine engine = Engine::delta;
  double wall_ms = 0.0;
  std::size_t nodes = 0;
};

struct BenchReport {
  std::vector<BenchRecord> records;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

inline constexpr const char* kBenchHeader =
    "instance_id,generator,params,kind,semantics,k,n,max_degree,answer,engine,wall_ms,nodes";

inline std::string to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << kBenchHeader << "\n";
  for (const auto& r : records) {
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
    out << r.instance_id << "," << r.generator << "," << r.params << "," << to_string(r.kind)
        << "," << to_string(r.semantics) << "," << r.k << "," << r.n << "," << r.max_degree << ","
        << (r.answer ? "yes" : "no") << "," << to_string(r.engine) << "," << ms << ","
        << r.nodes << "\n";
  }
  return out.str();
}

namespace detail {

inline BenchRecord run_one(const std::string& id, const std::string& generator,
                           const std::string& params, const ProblemInstance& p, Engine engine,
                           BenchReport& report) {
  const SolveResult r = solve(p, engine);
  BenchRecord rec{id,
                  generator,
                  params,
                  p.kind(),
                  p.semantics(),
                  p.parameter(),
                  p.framework().size(),
                  max_degree(p.framework()),
                  r.answer,
                  engine,
                  r.stats.wall_seconds * 1000.0,
                  r.stats.nodes};
  if (r.answer && (!r.witness || !verifies(p, *r.witness)))
    report.failures.push_back(id + " [" + std::string(to_string(engine)) +
                              "]: witness does not verify");
  report.records.push_back(rec);
  return rec;
}

}  // namespace detail

// Disjoint directed cycles of length 3 or 5 plus self-attacking noise
// arguments, each attacking one cycle argument; every argument has at most 3
// neighbours and the only admissible set is the empty one.
inline ArgumentationFramework odd_cycle_framework(std::size_t n, std::mt19937_64& rng) {
  if (n < 10) throw InvalidInstance("odd-cycle frameworks need at least 10 arguments");
  std::uniform_int_distribution<std::size_t> noise_dist(0, n / 5);
  const std::size_t noise = noise_dist(rng);
  std::size_t rest = n - noise;
  std::vector<std::size_t> cycles;
  std::bernoulli_distribution coin;
  while (rest >= 13) {
    cycles.push_back(coin(rng) ? 5 : 3);
    rest -= cycles.back();
  }
  static const std::map<std::size_t, std::vector<std::size_t>> tails = {
      {8, {3, 5}}, {9, {3, 3, 3}}, {10, {5, 5}}, {11, {3, 3, 5}}, {12, {3, 3, 3, 3}}};
  for (std::size_t len : tails.at(rest)) cycles.push_back(len);

  ArgumentationFramework::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_argument("a" + std::to_string(i));
  std::size_t next = 0;
  for (std::size_t len : cycles) {
    for (std::size_t i = 0; i < len; ++i) b.add_attack(next + i, next + (i + 1) % len);
    next += len;
  }
  const std::size_t cycle_args = next;
  std::vector<std::size_t> targets(cycle_args);
  for (std::size_t i = 0; i < cycle_args; ++i) targets[i] = i;
  std::shuffle(targets.begin(), targets.end(), rng);
  for (std::size_t j = 0; j < noise; ++j) {
    b.add_attack(cycle_args + j, cycle_args + j);
    b.add_attack(cycle_args + j, targets[j]);
  }
  return b.build();
}

inline const std::vector<std::size_t>& degree_sweep_sizes() {
  static const std::vector<std::size_t> sizes = {20, 30, 40, 50, 60};
  return sizes;
}
inline constexpr int kDegreeSweepMaxK = 4;
inline constexpr std::size_t kDegreeSweepInstances = 3;

inline void repair_degree_sweep(std::uint64_t seed, BenchReport& report) {
  std::mt19937_64 rng(seed);
  for (std::size_t n : degree_sweep_sizes())
    for (std::size_t i = 0; i < kDegreeSweepInstances; ++i) {
      const ArgumentationFramework f = odd_cycle_framework(n, rng);
      std::vector<ArgumentIndex> all(n);
      for (std::size_t x = 0; x < n; ++x) all[x] = x;
      std::shuffle(all.begin(), all.end(), rng);
      ArgumentSet s(n);
      s.insert(all[0]);
      s.insert(all[1]);
      for (int k = 1; k <= kDegreeSweepMaxK; ++k) {
        const auto p = ProblemInstance::repair(f, s, Semantics::adm, k);
        const std::string id =
            "deg-n" + std::to_string(n) + "-i" + std::to_string(i) + "-k" + std::to_string(k);
        const std::string params = "n=" + std::to_string(n) + ";s=2";
        std::vector<Engine> engines{Engine::delta, Engine::branching};
        if (n <= 8) engines.push_back(Engine::fo);
        std::vector<bool> answers;
        for (Engine e : engines)
          answers.push_back(detail::run_one(id, "odd-cycles", params, p, e, report).answer);
        for (bool a : answers)
          if (a != answers.front()) report.failures.push_back(id + ": engines disagree");
      }
    }
}

inline void repair_k_sweep(std::uint64_t seed, BenchReport& report) {
  std::mt19937_64 rng(seed);
  constexpr std::size_t n = 10;
  for (std::size_t i = 0; i < 4; ++i) {
    const ArgumentationFramework f = random_framework(n, 0.2, 0.05, rng);
    const ArgumentSet s = random_subset(n, 0.3, rng);
    for (Semantics sigma : {Semantics::adm, Semantics::com, Semantics::stb}) {
      bool previous = false;
      for (int k = 0; k <= 4; ++k) {
        const auto p = ProblemInstance::repair(f, s, sigma, k);
        const std::string id = "ksw-i" + std::to_string(i) + "-" + std::string(to_string(sigma)) +
                               "-k" + std::to_string(k);
        const std::string params = "n=10;p=0.2";
        std::vector<Engine> engines{Engine::delta, Engine::branching};
        if (k <= 3) engines.push_back(Engine::fo);
        std::vector<bool> answers;
        for (Engine e : engines)
          answers.push_back(detail::run_one(id, "random", params, p, e, report).answer);
        for (bool a : answers)
          if (a != answers.front()) report.failures.push_back(id + ": engines disagree");
        if (previous && !answers.front())
          report.failures.push_back(id + ": answer not monotone in k");
        previous = answers.front();
      }
    }
  }
}

// Runs every gadget with a known expected answer and records mismatches.
inline void gadget_validation(std::uint64_t seed, BenchReport& report) {
  std::mt19937_64 rng(seed);
  auto check = [&](const std::string& id, const std::string& generator, const std::string& params,
                   const ProblemInstance& p, bool expected) {
    std::vector<Engine> engines{Engine::delta};
    if (is_local(p.semantics())) engines.push_back(Engine::branching);
    for (Engine e : engines) {
      const BenchRecord r = detail::run_one(id, generator, params, p, e, report);
      if (r.answer != expected)
        report.failures.push_back(id + " [" + std::string(to_string(e)) + "]: expected " +
                                  (expected ? "yes" : "no"));
    }
  };

  for (std::size_t i = 0; i < 6; ++i) {
    const auto g = gadgets::random_kpartite(2, 2, 0.5, rng);
    const bool clique = g.has_multicolored_clique();
    const auto small = gadgets::gen_mcq_small(g);
    const auto adjust = gadgets::gen_adjust_from_small(small.framework, small.k);
    const auto center = gadgets::gen_center_from_small(small.framework, small.k);
    const std::string params = "parts=2;vertices=" + std::to_string(g.vertex_count()) +
                               ";edges=" + std::to_string(g.edges().size());
    for (Semantics sigma : kAllSemantics) {
      const std::string tag = "-g" + std::to_string(i) + "-" + std::string(to_string(sigma));
      check("mcq" + tag, small.generator, params, small.instance(sigma), clique);
      check("adj" + tag, adjust.generator, params, adjust.instance(sigma, true), clique);
      check("ctr" + tag, center.generator, params, center.instance(sigma, true), clique);
    }
  }

  for (std::size_t i = 0; i < 4; ++i) {
    std::uniform_int_distribution<int> vars(1, 3);
    const int n = vars(rng);
    std::uniform_int_distribution<int> clauses(1, std::min(4, 4 * n));
    const auto phi = gadgets::random_three_cnf_two(n, clauses(rng), rng);
    const bool unsat = !gadgets::sat_oracle(phi);
    const std::string params = "variables=" + std::to_string(phi.variable_count()) +
                               ";clauses=" + std::to_string(phi.clause_count());
    for (Semantics sigma : {Semantics::prf, Semantics::sem}) {
      const std::string tag = "-f" + std::to_string(i) + "-" + std::string(to_string(sigma));
      for (const auto& out : {gadgets::gen_cnf_small(phi), gadgets::gen_cnf_adjust(phi),
                              gadgets::gen_cnf_center(phi)}) {
        check(out.generator + tag, out.generator, params, out.instance(sigma), unsat);
        if (max_degree(out.framework) > 5)
          report.failures.push_back(out.generator + tag + ": degree above 5");
      }
    }
  }
}

inline const std::vector<std::string>& bench_suites() {
  static const std::vector<std::string> suites = {"repair-degree-sweep", "repair-k-sweep",
                                                  "gadget-validation"};
  return suites;
}

inline BenchReport run_bench(const std::string& suite, std::uint64_t seed) {
  BenchReport report;
  if (suite == "repair-degree-sweep") repair_degree_sweep(seed, report);
  else if (suite == "repair-k-sweep") repair_k_sweep(seed, report);
  else if (suite == "gadget-validation") gadget_validation(seed, report);
  else throw InvalidInstance("unknown bench suite '" + suite + "'");
  return report;
}

inline BenchReport run_bench(const std::string& suite, std::uint64_t seed,
                             const std::string& out_path) {
  BenchReport report = run_bench(suite, seed);
  write_file(out_path, to_csv(report.records));
  return report;
}

}  // namespace argudyn::io
