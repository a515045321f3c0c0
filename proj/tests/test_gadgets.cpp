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

#include <random>

#include "argudyn/gadgets/generators.hpp"
#include "argudyn/solve.hpp"
#include "fixtures.hpp"

using namespace argudyn;
using namespace argudyn::gadgets;

namespace {

KPartiteGraph triangle(bool with_v1v2 = true) {
  std::vector<KPartiteGraph::Edge> edges{{"v2", "v3"}, {"v1", "v3"}};
  if (with_v1v2) edges.emplace_back("v1", "v2");
  return KPartiteGraph({{"v1"}, {"v2"}, {"v3"}}, edges);
}

// Every 2-partite graph with the given part sizes, one per edge subset.
std::vector<KPartiteGraph> all_bipartite(std::size_t left, std::size_t right) {
  std::vector<std::vector<std::string>> parts(2);
  for (std::size_t i = 1; i <= left; ++i) parts[0].push_back("l" + std::to_string(i));
  for (std::size_t i = 1; i <= right; ++i) parts[1].push_back("r" + std::to_string(i));
  std::vector<KPartiteGraph::Edge> all;
  for (const auto& u : parts[0])
    for (const auto& v : parts[1]) all.emplace_back(u, v);
  std::vector<KPartiteGraph> out;
  for (unsigned long mask = 0; mask < (1UL << all.size()); ++mask) {
    std::vector<KPartiteGraph::Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1UL) edges.push_back(all[i]);
    out.emplace_back(parts, edges);
  }
  return out;
}

std::size_t literal_occurrences(const ThreeCnfTwoFormula& phi) {
  std::size_t total = 0;
  for (const auto& c : phi.clauses()) total += c.size();
  return total;
}

}  // namespace

TEST(Graph, Validation) {
  EXPECT_THROW(KPartiteGraph({{"a", "b"}}, {{"a", "b"}}), InvalidInstance);
  EXPECT_THROW(KPartiteGraph({{"a"}, {"a"}}, {}), InvalidInstance);
  EXPECT_THROW(KPartiteGraph({{"a"}, {"b"}}, {{"a", "b"}, {"b", "a"}}), InvalidInstance);
  EXPECT_THROW(KPartiteGraph({{"a"}, {"b"}}, {{"a", "c"}}), InvalidInstance);
}

TEST(Graph, CliqueSearch) {
  EXPECT_TRUE(triangle().has_multicolored_clique());
  EXPECT_FALSE(triangle(false).has_multicolored_clique());
}

TEST(EvenKDuplicate, Examples) {
  const auto d = even_k_duplicate(KPartiteGraph({{"v"}}, {}));
  EXPECT_EQ(d.part_count(), 2u);
  EXPECT_EQ(d.vertex_count(), 2u);
  EXPECT_EQ(d.edges().size(), 1u);
  const auto t = even_k_duplicate(triangle());
  EXPECT_EQ(t.part_count(), 6u);
  EXPECT_EQ(t.edges().size(), 15u);
}

TEST(EvenKDuplicate, PreservesCliques) {
  for (std::size_t l = 1; l <= 3; ++l)
    for (std::size_t r = 1; r <= 3; ++r)
      for (const auto& g : all_bipartite(l, r))
        ASSERT_EQ(even_k_duplicate(g).has_multicolored_clique(), g.has_multicolored_clique());
}

TEST(McqGadget, Examples) {
  auto out = gen_mcq_small(triangle());
  EXPECT_EQ(out.framework.size(), 9u);
  EXPECT_EQ(out.k, 3);
  auto r = delta::solve_small(out.framework, Semantics::adm, 3);
  ASSERT_TRUE(r.answer);
  EXPECT_EQ(*r.witness, out.framework.set_of({"y_v1", "y_v2", "y_v3"}));
  EXPECT_FALSE(delta::solve_small(gen_mcq_small(triangle(false)).framework, Semantics::adm, 3).answer);
  EXPECT_THROW(gen_mcq_small(KPartiteGraph({{"v"}}, {})), InvalidInstance);
}

TEST(McqGadget, SizeFormulas) {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 40; ++round) {
    const std::size_t k = 2 + round % 3;
    const auto g = random_kpartite(k, 3, 0.5, rng);
    const auto out = gen_mcq_small(g);
    const std::size_t v = g.vertex_count();
    std::size_t same_part = 0;
    for (const auto& p : g.parts()) same_part += p.size() * (p.size() - 1);
    EXPECT_EQ(out.framework.size(), v + v * (k - 1));
    EXPECT_EQ(out.framework.attack_count(),
              same_part + 2 * v * (k - 1) + same_part * (k - 1) + 2 * g.edges().size());
    for (const auto& [role, name] : out.roles) EXPECT_TRUE(out.framework.find(name)) << role;
  }
  std::vector<std::vector<std::string>> parts{{"a", "b"}, {"c", "d"}, {"e", "f"}};
  EXPECT_EQ(gen_mcq_small(KPartiteGraph(parts, {})).framework.size(), 18u);
}

TEST(McqGadget, CliqueIsStable) {
  const auto out = gen_mcq_small(triangle());
  const auto y = out.framework.set_of({"y_v1", "y_v2", "y_v3"});
  for (Semantics s : kAllSemantics) EXPECT_TRUE(is_extension(out.framework, y, s));
}

TEST(McqGadget, SmallIffClique) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 60; ++round) {
    const auto g = random_kpartite(2 + round % 2, 2, 0.6, rng);
    const auto out = gen_mcq_small(g);
    for (Semantics s : {Semantics::adm, Semantics::stb}) {
      const auto small = delta::solve(out.instance(s));
      ASSERT_EQ(small.answer, g.has_multicolored_clique()) << round;
      const auto repair = delta::solve(
          ProblemInstance::repair(out.framework, out.framework.empty_set(), s, out.k));
      EXPECT_EQ(repair.answer, small.answer);
    }
  }
  for (const auto& g : all_bipartite(2, 2))
    ASSERT_EQ(delta::solve(gen_mcq_small(g).instance(Semantics::com)).answer,
              g.has_multicolored_clique());
}

TEST(AdjustGadget, Examples) {
  const auto f2 = gen_adjust_from_small(fixtures::f2(), 3);
  EXPECT_FALSE(delta::solve(f2.instance(Semantics::adm, true)).answer);
  const auto f1 = gen_adjust_from_small(fixtures::f1(), 1);
  EXPECT_TRUE(delta::solve(f1.instance(Semantics::stb)).answer);
  EXPECT_EQ(f1.k, 2);
  for (const auto& base : {fixtures::f1(), fixtures::f2(), fixtures::f3(), fixtures::f4()}) {
    const auto out = gen_adjust_from_small(base, 2);
    for (Semantics s : kAllSemantics)
      EXPECT_TRUE(is_extension(out.framework, out.framework.set_of({"t"}), s));
  }
}

TEST(AdjustGadget, FreshNameOnCollision) {
  const ArgumentationFramework f({"t", "t_1"}, {{"t", "t_1"}});
  const auto out = gen_adjust_from_small(f, 1);
  EXPECT_EQ(out.target, "t_2");
  EXPECT_EQ(out.framework.size(), 3u);
}

// Without a nonemptiness requirement the empty set is always an admissible
// answer at distance 1 from {t}.
TEST(AdjustGadget, EmptyAnswerUnderLiteralReading) {
  const auto out = gen_adjust_from_small(fixtures::f2(), 3);
  const auto r = delta::solve(out.instance(Semantics::adm));
  ASSERT_TRUE(r.answer);
  EXPECT_TRUE(r.witness->empty());
}

TEST(CenterGadget, Examples) {
  const auto f1 = gen_center_from_small(fixtures::f1(), 2);
  EXPECT_EQ(f1.framework.size(), 2u + 2 + 4 * 2);
  EXPECT_EQ(distance(f1.framework.set_of(f1.e1), f1.framework.set_of(f1.e2)), 6u);
  EXPECT_EQ(f1.k, 6);
  for (Semantics s : kAllSemantics) {
    EXPECT_TRUE(is_extension(f1.framework, f1.framework.set_of(f1.e1), s));
    EXPECT_TRUE(is_extension(f1.framework, f1.framework.set_of(f1.e2), s));
  }
  EXPECT_TRUE(delta::solve(f1.instance(Semantics::stb)).answer);
  const auto f2 = gen_center_from_small(fixtures::f2(), 2);
  EXPECT_FALSE(delta::solve(f2.instance(Semantics::stb)).answer);
  EXPECT_THROW(gen_center_from_small(fixtures::f1(), 3), OddK);
  EXPECT_EQ(f1.role_sets.at("E0"), (std::vector<std::string>{"w_1", "wp_2"}));
}

TEST(CenterGadget, ZeroK) {
  const auto out = gen_center_from_small(fixtures::f1(), 0);
  EXPECT_EQ(out.framework.size(), 4u);
  EXPECT_EQ(out.k, 2);
  EXPECT_FALSE(delta::solve(out.instance(Semantics::stb)).answer);
}

TEST(Cnf, Validation) {
  EXPECT_THROW(ThreeCnfTwoFormula(4, {{1, 2, 3, 4}}), NotThreeCnfTwo);
  EXPECT_THROW(ThreeCnfTwoFormula(1, {{1}, {1}, {1}}), NotThreeCnfTwo);
  EXPECT_THROW(ThreeCnfTwoFormula(1, {{2}}), NotThreeCnfTwo);
  EXPECT_THROW(ThreeCnfTwoFormula(1, {{1, 1}}), NotThreeCnfTwo);
  EXPECT_NO_THROW(ThreeCnfTwoFormula(2, {{1, -2}, {1, 2}, {-1}}));
}

TEST(Cnf, SatOracle) {
  EXPECT_TRUE(sat_oracle(ThreeCnfTwoFormula(1, {{1}})));
  EXPECT_FALSE(sat_oracle(ThreeCnfTwoFormula(1, {{1}, {-1}})));
  EXPECT_FALSE(sat_oracle(ThreeCnfTwoFormula(2, {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}})));
  EXPECT_THROW(sat_oracle(ThreeCnfTwoFormula(21, {})), CapExceeded);
}

TEST(Cnf, RandomFormulasAreValid) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + round % 4;
    const int m = 1 + round % 5;
    if (m > 4 * n) continue;
    const auto phi = random_three_cnf_two(n, m, rng);
    EXPECT_EQ(phi.variable_count(), n);
    EXPECT_EQ(static_cast<int>(phi.clause_count()), m);
  }
  for (int n = 1; n <= 4; ++n) {
    const auto full = random_three_cnf_two(n, 4 * n, rng);
    for (const auto& c : full.clauses()) EXPECT_EQ(c.size(), 1u);
  }
  EXPECT_THROW(random_three_cnf_two(1, 5, rng), InvalidInstance);
}

TEST(CnfGadget, Examples) {
  const ThreeCnfTwoFormula unsat(1, {{1}, {-1}});
  const ThreeCnfTwoFormula sat(1, {{1}});
  const auto u = gen_cnf_small(unsat);
  auto r = delta::solve(u.instance(Semantics::prf));
  ASSERT_TRUE(r.answer);
  EXPECT_EQ(*r.witness, u.framework.set_of({"e"}));
  EXPECT_FALSE(delta::solve(gen_cnf_small(sat).instance(Semantics::prf)).answer);

  for (Semantics s : {Semantics::prf, Semantics::sem}) {
    EXPECT_TRUE(delta::solve(gen_cnf_adjust(unsat).instance(s)).answer);
    EXPECT_FALSE(delta::solve(gen_cnf_adjust(sat).instance(s)).answer);
    EXPECT_TRUE(delta::solve(gen_cnf_center(unsat).instance(s)).answer);
  }
  const auto c = gen_cnf_center(unsat);
  EXPECT_EQ(distance(c.framework.set_of(c.e1), c.framework.set_of(c.e2)), 6u);
  EXPECT_TRUE(is_extension(c.framework, c.framework.set_of({"w1", "w2p"}), Semantics::prf));
  const auto a = gen_cnf_adjust(sat);
  EXPECT_TRUE(is_extension(a.framework, a.framework.set_of({"t1"}), Semantics::sem));
}

// Sizes of the degree-reduced gadget: both subdivided trees add four
// arguments per extra leaf.
TEST(CnfGadget, SizeFormulas) {
  std::mt19937_64 rng(13);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + round % 4;
    const int m = 1 + round % 5;
    if (m > 4 * n) continue;
    const auto phi = random_three_cnf_two(n, m, rng);
    const auto out = gen_cnf_small(phi);
    const std::size_t un = static_cast<std::size_t>(n), um = static_cast<std::size_t>(m);
    EXPECT_EQ(out.framework.size(), 3 + um + 2 * un + (4 * um - 4) + (8 * un - 4));
    const std::size_t clause_tree = 4 * (um - 1) + (2 * um - 2) + um;
    const std::size_t literal_tree = 4 * (2 * un - 1) + (4 * un - 2) + 2 * un;
    EXPECT_EQ(out.framework.attack_count(),
              2 + um + literal_occurrences(phi) + 2 * un + clause_tree + literal_tree);
    EXPECT_LE(max_degree(out.framework), 5u);
    EXPECT_LE(max_degree(gen_cnf_adjust(phi).framework), 5u);
    EXPECT_LE(max_degree(gen_cnf_center(phi).framework), 5u);
    EXPECT_EQ(gen_cnf_adjust(phi).framework.size(), out.framework.size() + 3);
    EXPECT_EQ(gen_cnf_center(phi).framework.size(), out.framework.size() + 11);
    for (const auto& [role, name] : out.roles) EXPECT_TRUE(out.framework.find(name)) << role;
  }
}

TEST(CnfGadget, LeavesInOrder) {
  const ThreeCnfTwoFormula phi(2, {{1}, {2}, {-1}});
  const auto out = gen_cnf_small(phi);
  const auto& f = out.framework;
  for (int j = 1; j <= 3; ++j) {
    const auto leaf = out.roles.at("B_phi_leaf_" + std::to_string(j));
    EXPECT_TRUE(f.attacks(f.index_of("C_" + std::to_string(j)), f.index_of(leaf)));
  }
  for (int i = 1; i <= 2; ++i) {
    EXPECT_TRUE(f.attacks(f.index_of(out.roles.at("B_nphi_leaf_" + std::to_string(i))),
                          f.index_of("x_" + std::to_string(i))));
    EXPECT_TRUE(f.attacks(f.index_of(out.roles.at("B_nphi_leaf_" + std::to_string(2 + i))),
                          f.index_of("nx_" + std::to_string(i))));
  }
}

TEST(Gadgets, DigestsAreStable) {
  EXPECT_EQ(gen_mcq_small(triangle()).source_digest, gen_mcq_small(triangle()).source_digest);
  EXPECT_NE(gen_mcq_small(triangle()).source_digest,
            gen_mcq_small(triangle(false)).source_digest);
  EXPECT_EQ(digest(""), "cbf29ce484222325");
}
