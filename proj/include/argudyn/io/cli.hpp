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

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "argudyn/enumerate.hpp"
#include "argudyn/gadgets/generators.hpp"
#include "argudyn/io/bench.hpp"
#include "argudyn/io/formats.hpp"
#include "argudyn/solve.hpp"

namespace argudyn::io {

inline nlohmann::json names_json(const ArgumentationFramework& f, const ArgumentSet& s) {
  return nlohmann::json(f.names_of(s));
}

inline std::string braced(const ArgumentationFramework& f, const ArgumentSet& s) {
  return "{" + join_names(f, s) + "}";
}

inline nlohmann::json result_json(const ArgumentationFramework& f, const SolveResult& r,
                                  Engine engine) {
  nlohmann::json j;
  j["answer"] = r.answer ? "YES" : "NO";
  j["witness"] = r.witness ? names_json(f, *r.witness) : nlohmann::json(nullptr);
  j["stats"] = {{"engine", std::string(to_string(engine))},
                {"nodes", r.stats.nodes},
                {"candidates", r.stats.candidates},
                {"wall_ms", r.stats.wall_seconds * 1000.0}};
  return j;
}

inline nlohmann::json provenance_json(const gadgets::GadgetOutput& g) {
  nlohmann::json j;
  j["generator"] = g.generator;
  j["source_digest"] = g.source_digest;
  j["params"] = g.params;
  j["kind"] = std::string(to_string(g.kind));
  j["k"] = g.k;
  j["arguments"] = g.framework.size();
  j["attacks"] = g.framework.attack_count();
  j["max_degree"] = max_degree(g.framework);
  if (g.kind == ProblemKind::adjust) {
    j["e0"] = g.e0;
    j["target"] = g.target;
  }
  if (g.kind == ProblemKind::center) {
    j["e1"] = g.e1;
    j["e2"] = g.e2;
  }
  j["roles"] = g.roles;
  j["role_sets"] = g.role_sets;
  return j;
}

namespace detail {

struct CliOptions {
  std::string af;
  std::string set;
  std::string semantics;
  std::string e0, target, e1, e2;
  std::string engine = "delta";
  std::string format = "plain";
  std::string out;
  std::string provenance;
  std::string cnf;
  std::string base_af;
  std::string suite;
  std::optional<int> k;
  std::optional<std::size_t> cap;
  bool strict = false;
  bool nonempty = false;
  std::size_t parts = 3;
  std::size_t part_size = 2;
  double edge_prob = 0.5;
  std::uint64_t seed = 1;
  int variables = 3;
  int clauses = 4;
};

inline int decision_exit(bool answer, const CliOptions& o) { return (!answer && o.strict) ? 1 : 0; }

inline int run_check(const CliOptions& o, std::ostream& out) {
  const auto f = parse_framework_file(o.af);
  const Semantics sigma = parse_semantics(o.semantics);
  const ArgumentSet s = parse_set_list(f, o.set);
  const bool yes = is_extension(f, s, sigma);
  if (o.format == "json")
    out << nlohmann::json{{"answer", yes ? "YES" : "NO"},
                          {"semantics", std::string(to_string(sigma))},
                          {"set", names_json(f, s)}}
               .dump()
        << "\n";
  else
    out << (yes ? "YES" : "NO") << "\n";
  return decision_exit(yes, o);
}

inline int run_enumerate(const CliOptions& o, std::ostream& out) {
  const auto f = parse_framework_file(o.af);
  const Semantics sigma = parse_semantics(o.semantics);
  const ExtensionList list = enumerate(f, sigma, o.cap.value_or(default_enumeration_cap()));
  if (o.format == "json") {
    nlohmann::json exts = nlohmann::json::array();
    for (const auto& e : list.extensions) exts.push_back(names_json(f, e));
    out << nlohmann::json{{"semantics", std::string(to_string(sigma))},
                          {"count", list.size()},
                          {"extensions", exts}}
               .dump()
        << "\n";
  } else {
    for (const auto& e : list.extensions) out << braced(f, e) << "\n";
  }
  return 0;
}

inline int require_k(const CliOptions& o) {
  if (!o.k) throw InvalidInstance("-k is required");
  return *o.k;
}

inline int run_solve(ProblemKind kind, const CliOptions& o, std::ostream& out) {
  const auto f = parse_framework_file(o.af);
  const Semantics sigma = parse_semantics(o.semantics);
  const Engine engine = parse_engine(o.engine);
  if (engine == Engine::fo && !is_local(sigma))
    throw UnsupportedSemantics("engine fo does not support semantics " +
                               std::string(to_string(sigma)));
  if (engine == Engine::branching && !is_local(sigma))
    throw UnsupportedSemantics("engine branching does not support semantics " +
                               std::string(to_string(sigma)));
  auto instance = [&]() -> ProblemInstance {
    switch (kind) {
      case ProblemKind::small: return ProblemInstance::small(f, sigma, require_k(o));
      case ProblemKind::repair:
        return ProblemInstance::repair(f, parse_set_list(f, o.set), sigma, require_k(o));
      case ProblemKind::adjust: {
        const auto t = f.find(o.target);
        if (!t) throw InvalidInstance("unknown target argument '" + o.target + "'");
        return ProblemInstance::adjust(f, parse_set_list(f, o.e0), *t, sigma, require_k(o),
                                       o.nonempty);
      }
      case ProblemKind::center:
        return ProblemInstance::center(f, parse_set_list(f, o.e1), parse_set_list(f, o.e2),
                                       sigma, o.nonempty);
    }
    throw InvalidInstance("unknown problem");
  }();
  const SolveResult r = solve(instance, engine);
  if (o.format == "json") {
    out << result_json(f, r, engine).dump() << "\n";
  } else {
    out << (r.answer ? "YES" : "NO") << "\n";
    if (r.witness) out << "witness: " << braced(f, *r.witness) << "\n";
  }
  return decision_exit(r.answer, o);
}

inline gadgets::ThreeCnfTwoFormula formula_for(const CliOptions& o) {
  if (!o.cnf.empty()) return parse_dimacs_cnf(read_file(o.cnf));
  std::mt19937_64 rng(o.seed);
  return gadgets::random_three_cnf_two(o.variables, o.clauses, rng);
}

inline int run_gen(const std::string& which, const CliOptions& o, std::ostream& out) {
  gadgets::GadgetOutput g = [&] {
    if (which == "mcq") {
      std::mt19937_64 rng(o.seed);
      return gadgets::gen_mcq_small(
          gadgets::random_kpartite(o.parts, o.part_size, o.edge_prob, rng));
    }
    if (which == "adjust" || which == "center") {
      if (o.base_af.empty()) throw InvalidInstance("--base-af is required");
      const auto base = parse_framework_file(o.base_af);
      return which == "adjust" ? gadgets::gen_adjust_from_small(base, require_k(o))
                               : gadgets::gen_center_from_small(base, require_k(o));
    }
    const auto phi = formula_for(o);
    if (which == "cnf-small") return gadgets::gen_cnf_small(phi);
    if (which == "cnf-adjust") return gadgets::gen_cnf_adjust(phi);
    return gadgets::gen_cnf_center(phi);
  }();
  g.params["seed"] = std::to_string(o.seed);
  const std::string apx = write_apx(g.framework);
  const std::string side = provenance_json(g).dump(2) + "\n";
  if (o.out.empty()) {
    out << apx;
  } else {
    write_file(o.out, apx);
    write_file(o.provenance.empty() ? o.out + ".json" : o.provenance, side);
    out << "wrote " << o.out << " (" << g.framework.size() << " arguments, "
        << g.framework.attack_count() << " attacks)\n";
  }
  if (o.out.empty() && !o.provenance.empty()) write_file(o.provenance, side);
  return 0;
}

inline int run_bench_command(const CliOptions& o, std::ostream& out, std::ostream& err) {
  const BenchReport report = run_bench(o.suite, o.seed, o.out);
  out << o.suite << ": " << report.records.size() << " rows written to " << o.out << "\n";
  for (const auto& f : report.failures) err << "check failed: " << f << "\n";
  return report.ok() ? 0 : 1;
}

inline std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

}  // namespace detail

// Exit codes: 0 success, 1 "NO" under --strict or a failed bench check,
// 2 usage, input or solver errors (one diagnostic line on `err`).
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  detail::CliOptions o;
  CLI::App app{"Distance-bounded extension problems for abstract argumentation", "argudyn"};
  app.require_subcommand(1);
  const std::vector<std::string> semantics_names{"adm", "com", "prf", "sem", "stb"};

  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", o.format, "plain or json")
        ->check(CLI::IsMember({"plain", "json"}));
  };
  auto add_af = [&](CLI::App* c) {
    c->add_option("--af", o.af, "framework file (.apx or .tgf)")->required();
    c->add_option("--semantics", o.semantics, "adm, com, prf, sem or stb")
        ->required()
        ->check(CLI::IsMember(semantics_names));
    c->add_flag("--strict", o.strict, "exit 1 on NO");
    add_format(c);
  };

  auto* check = app.add_subcommand("check", "test whether a set is an extension");
  add_af(check);
  check->add_option("--set", o.set, "comma-separated arguments");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list all extensions");
  add_af(enumerate_cmd);
  enumerate_cmd->add_option("--cap", o.cap, "maximum framework size for enumeration");

  auto* solve_cmd = app.add_subcommand("solve", "decide a distance-bounded problem");
  solve_cmd->require_subcommand(1);
  std::vector<std::pair<CLI::App*, ProblemKind>> kinds;
  for (ProblemKind kind :
       {ProblemKind::small, ProblemKind::repair, ProblemKind::adjust, ProblemKind::center}) {
    auto* c = solve_cmd->add_subcommand(std::string(to_string(kind)));
    add_af(c);
    c->add_option("--engine", o.engine, "delta, branching or fo")
        ->check(CLI::IsMember({"delta", "branching", "fo"}));
    c->add_option("--cap", o.cap, "unused by solvers; accepted for symmetry");
    if (kind != ProblemKind::center) c->add_option("-k", o.k, "distance bound");
    if (kind == ProblemKind::repair) c->add_option("--set", o.set, "set to repair");
    if (kind == ProblemKind::adjust) {
      c->add_option("--e0", o.e0, "starting extension")->required();
      c->add_option("--target", o.target, "argument whose status must change")->required();
    }
    if (kind == ProblemKind::center) {
      c->add_option("--e1", o.e1, "first extension")->required();
      c->add_option("--e2", o.e2, "second extension")->required();
    }
    if (kind == ProblemKind::adjust || kind == ProblemKind::center)
      c->add_flag("--nonempty", o.nonempty, "require a nonempty answer set");
    kinds.emplace_back(c, kind);
  }

  auto* gen = app.add_subcommand("gen", "generate a reduction instance");
  gen->require_subcommand(1);
  std::vector<std::pair<CLI::App*, std::string>> generators;
  for (const char* name : {"mcq", "adjust", "center", "cnf-small", "cnf-adjust", "cnf-center"}) {
    auto* c = gen->add_subcommand(name);
    c->add_option("--out", o.out, "APX output path (default stdout)");
    c->add_option("--provenance", o.provenance, "JSON side-car path (default OUT.json)");
    c->add_option("--seed", o.seed, "random seed");
    const std::string n = name;
    if (n == "mcq") {
      c->add_option("--parts", o.parts, "number of parts")->check(CLI::Range(2, 64));
      c->add_option("--part-size", o.part_size, "maximum vertices per part")
          ->check(CLI::Range(1, 64));
      c->add_option("--edge-prob", o.edge_prob, "edge probability")->check(CLI::Range(0.0, 1.0));
    } else if (n == "adjust" || n == "center") {
      c->add_option("--base-af", o.base_af, "framework of the Small instance")->required();
      c->add_option("-k", o.k, "Small parameter")->required();
    } else {
      c->add_option("--cnf", o.cnf, "DIMACS file (default: random formula)");
      c->add_option("--variables", o.variables, "random formula variables")
          ->check(CLI::Range(1, 20));
      c->add_option("--clauses", o.clauses, "random formula clauses")->check(CLI::Range(0, 80));
    }
    generators.emplace_back(c, n);
  }

  auto* bench = app.add_subcommand("bench", "run a benchmark suite");
  bench->add_option("--suite", o.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(bench_suites()));
  bench->add_option("--out", o.out, "CSV output path")->required();
  bench->add_option("--seed", o.seed, "random seed");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
    if (*check) return detail::run_check(o, out);
    if (*enumerate_cmd) return detail::run_enumerate(o, out);
    for (const auto& [c, kind] : kinds)
      if (*c) return detail::run_solve(kind, o, out);
    for (const auto& [c, name] : generators)
      if (*c) return detail::run_gen(name, o, out);
    if (*bench) return detail::run_bench_command(o, out, err);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "argudyn: " << detail::one_line(e.what()) << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "argudyn: " << detail::one_line(e.what()) << "\n";
    return 2;
  }
  return 2;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout,
                   std::ostream& err = std::cerr) {
  return run_cli(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace argudyn::io
