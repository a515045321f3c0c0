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

#include <cstdlib>
#include <random>

#include "argudyn/clause_search.hpp"
#include "argudyn/enumerate.hpp"
#include "argudyn/random_af.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace argudyn;
using fixtures::f1;
using fixtures::f2;
using fixtures::f3;

namespace {

std::vector<oracle::Names> as_names(const ArgumentationFramework& f, const ExtensionList& l) {
  std::vector<oracle::Names> out;
  for (const auto& e : l.extensions) out.push_back(oracle::names_of(f, e));
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  const auto f = f1();
  const auto stb = enumerate(f, Semantics::stb);
  ASSERT_EQ(stb.size(), 2u);
  EXPECT_EQ(stb.extensions[0], f.set_of({"a"}));
  EXPECT_EQ(stb.extensions[1], f.set_of({"b"}));
  const auto prf = enumerate(f2(), Semantics::prf);
  ASSERT_EQ(prf.size(), 1u);
  EXPECT_TRUE(prf.extensions[0].empty());
  EXPECT_TRUE(enumerate(f2(), Semantics::stb).empty());
}

TEST(Enumerate, CanonicalOrder) {
  const auto f = fixtures::f4();
  const auto adm = enumerate(f, Semantics::adm);
  for (std::size_t i = 1; i < adm.size(); ++i)
    EXPECT_TRUE(canonical_less(adm.extensions[i - 1], adm.extensions[i]));
}

TEST(Enumerate, Cap) {
  ArgumentationFramework::Builder b;
  for (int i = 0; i < 21; ++i) b.add_argument("a" + std::to_string(i));
  const auto f = b.build();
  EXPECT_THROW(enumerate(f, Semantics::adm), CapExceeded);
  EXPECT_THROW(enumerate(f, Semantics::adm, 5), CapExceeded);
  EXPECT_EQ(enumerate(f, Semantics::stb, 21).size(), 1u);
}

TEST(Enumerate, CapFromEnvironment) {
  ::setenv("ARGUDYN_ENUM_CAP", "3", 1);
  EXPECT_EQ(default_enumeration_cap(), 3u);
  EXPECT_THROW(enumerate(fixtures::f4(), Semantics::adm), CapExceeded);
  ::unsetenv("ARGUDYN_ENUM_CAP");
  EXPECT_EQ(default_enumeration_cap(), kDefaultEnumerationCap);
}

TEST(Membership, Examples) {
  EXPECT_TRUE(is_preferred(f2(), f2().empty_set()));
  EXPECT_TRUE(is_preferred(f1(), f1().set_of({"a"})));
  EXPECT_FALSE(is_preferred(f1(), f1().empty_set()));
  EXPECT_TRUE(is_semistable(f3(), f3().set_of({"a", "c"})));
  EXPECT_TRUE(is_preferred_exhaustive(f1(), f1().set_of({"a"}), 20));
  EXPECT_FALSE(is_semistable_exhaustive(f1(), f1().empty_set(), 20));
}

// The self-attacking c is never in any range, so there is no stable
// extension while {a} is still semi-stable.
TEST(Membership, SemistableWithoutStable) {
  ArgumentationFramework f({"a", "b", "c"}, {{"a", "b"}, {"c", "c"}});
  EXPECT_TRUE(enumerate(f, Semantics::stb).empty());
  EXPECT_TRUE(is_semistable(f, f.set_of({"a"})));
  EXPECT_FALSE(is_semistable(f, f.empty_set()));
  EXPECT_TRUE(is_preferred(f, f.set_of({"a"})));
}

TEST(ClauseSearch, SmallFormulas) {
  ClauseSearch unsat(1);
  unsat.add_unit(pos(0));
  unsat.add_unit(neg(0));
  EXPECT_FALSE(unsat.solve().has_value());

  ClauseSearch s(3);
  s.add_clause({pos(0), pos(1)});
  s.add_clause({neg(0), pos(2)});
  s.add_clause({neg(1), pos(2)});
  s.add_unit(neg(2));
  EXPECT_FALSE(s.solve().has_value());

  ClauseSearch t(3);
  t.add_clause({pos(0), pos(1), pos(2)});
  t.add_clause({neg(0)});
  t.add_clause({neg(1)});
  const auto model = t.solve();
  ASSERT_TRUE(model.has_value());
  EXPECT_TRUE((*model)[2]);
}

// Enumeration, both membership routes and the oracle agree, and the chain
// stb <= sem <= prf <= com <= adm holds.
TEST(EnumerateProperties, RandomFrameworks) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = 1 + round % 8;
    const auto f = random_framework(n, 0.25, 0.1, rng);
    const oracle::Af o(f);
    std::map<Semantics, ExtensionList> lists;
    for (Semantics s : kAllSemantics) {
      lists.emplace(s, enumerate(f, s));
      auto expected = oracle::extensions(o, std::string(to_string(s)));
      auto got = as_names(f, lists.at(s));
      std::sort(expected.begin(), expected.end());
      std::sort(got.begin(), got.end());
      ASSERT_EQ(got, expected) << to_string(s) << " round " << round;
    }
    auto included = [&](Semantics a, Semantics b) {
      for (const auto& e : lists.at(a).extensions)
        if (!lists.at(b).contains(e)) return false;
      return true;
    };
    ASSERT_TRUE(included(Semantics::stb, Semantics::sem));
    ASSERT_TRUE(included(Semantics::sem, Semantics::prf));
    ASSERT_TRUE(included(Semantics::prf, Semantics::com));
    ASSERT_TRUE(included(Semantics::com, Semantics::adm));
    ASSERT_TRUE(lists.at(Semantics::adm).contains(f.empty_set()));
    if (!lists.at(Semantics::stb).empty())
      ASSERT_EQ(lists.at(Semantics::stb).extensions, lists.at(Semantics::sem).extensions);

    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      ArgumentSet s(n);
      for (ArgumentIndex i = 0; i < n; ++i)
        if (mask >> i & 1UL) s.insert(i);
      ASSERT_EQ(is_preferred(f, s), lists.at(Semantics::prf).contains(s));
      ASSERT_EQ(is_semistable(f, s), lists.at(Semantics::sem).contains(s));
      ASSERT_EQ(is_preferred_exhaustive(f, s, 20), is_preferred(f, s));
      ASSERT_EQ(is_semistable_exhaustive(f, s, 20), is_semistable(f, s));
      for (Semantics sigma : kAllSemantics)
        ASSERT_EQ(is_extension(f, s, sigma), lists.at(sigma).contains(s));
    }
  }
}
