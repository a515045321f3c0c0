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
#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "argudyn/enumerate.hpp"
#include "argudyn/problem.hpp"

namespace argudyn {

// Bounded search for adm/com/stb that only ever looks at the neighbourhood of
// a violation. Every argument starts at its status in the base set; a branch
// commits one argument to the opposite status, which costs one unit of the
// distance budget. Commitments are never undone on a search path.
//
// At each node the first violation in canonical order is repaired by one of
// its local fixes:
//   conflict (x, y) inside E        -> out x | out y
//   member x with unanswered attacker z -> out x | in w, for w attacking z
//   (stb) z outside E, not attacked -> in z | in w, for w attacking z
//   (com) z outside E, defended by E -> in z | out w, for w in E attacking
//                                       an attacker of z
// Any solution consistent with the current commitments agrees with at least
// one branch, so the search is complete; with maximum degree d each node has
// at most d^2 + 1 children.
namespace branching {

struct Task {
  Semantics sigma = Semantics::adm;
  ArgumentSet base;
  std::size_t budget = 0;
  bool nonempty = false;
  // Arguments flipped relative to `base` before the search starts (each one
  // is committed and charged to the budget).
  std::vector<ArgumentIndex> forced_flips;
  // Optional constraint dist(E, far_target) <= far_limit.
  std::optional<ArgumentSet> far_target;
  std::size_t far_limit = 0;
};

class Search {
 public:
  Search(const ArgumentationFramework& f, Task task) : f_(f), task_(std::move(task)) {
    if (!is_local(task_.sigma))
      throw UnsupportedSemantics("branching engine supports adm, com and stb only, not " +
                                 std::string(to_string(task_.sigma)));
  }

  std::optional<ArgumentSet> run() {
    ArgumentSet e = task_.base;
    ArgumentSet committed(f_.size());
    std::size_t used = 0;
    for (ArgumentIndex x : task_.forced_flips) {
      if (committed.contains(x)) continue;
      e.flip(x);
      committed.insert(x);
      ++used;
    }
    if (used > task_.budget) return std::nullopt;
    return visit(e, committed, used);
  }

  std::size_t nodes() const noexcept { return nodes_; }

 private:
  struct Move {
    ArgumentIndex argument;
    bool include;
  };

  std::optional<ArgumentSet> visit(ArgumentSet& e, ArgumentSet& committed, std::size_t used) {
    ++nodes_;
    const std::size_t left = task_.budget - used;
    if (task_.far_target && distance(e, *task_.far_target) > task_.far_limit + left)
      return std::nullopt;

    std::vector<Move> moves;
    if (!find_violation(e, moves)) {
      if (task_.far_target && distance(e, *task_.far_target) > task_.far_limit) {
        const ArgumentSet diff = e ^ *task_.far_target;
        diff.for_each([&](ArgumentIndex x) { moves.push_back({x, !e.contains(x)}); });
      } else if (task_.nonempty && e.empty()) {
        for (ArgumentIndex x = 0; x < f_.size(); ++x) moves.push_back({x, true});
      } else {
        if (!is_extension(f_, e, task_.sigma))
          throw std::logic_error("branching leaf failed verification");
        return e;
      }
    }
    if (left == 0) return std::nullopt;
    for (const Move& m : moves) {
      if (committed.contains(m.argument)) continue;
      if (e.contains(m.argument) == m.include) continue;
      e.set(m.argument, m.include);
      committed.insert(m.argument);
      auto found = visit(e, committed, used + 1);
      committed.erase(m.argument);
      e.set(m.argument, !m.include);
      if (found) return found;
    }
    return std::nullopt;
  }

  // Fills `moves` with the fixes of the first violation; false if none.
  bool find_violation(const ArgumentSet& e, std::vector<Move>& moves) const {
    // conflict inside E
    bool found = false;
    e.for_each([&](ArgumentIndex x) {
      if (found) return;
      const ArgumentSet hit = f_.attacked_by(x) & e;
      if (hit.empty()) return;
      const ArgumentIndex y = hit.first();
      moves.push_back({x, false});
      if (y != x) moves.push_back({y, false});
      found = true;
    });
    if (found) return true;

    const ArgumentSet hit = attacked_by_set(f_, e);
    // member with an attacker that E does not attack
    e.for_each([&](ArgumentIndex x) {
      if (found) return;
      const ArgumentSet open = f_.attackers_of(x) - hit;
      if (open.empty()) return;
      const ArgumentIndex z = open.first();
      moves.push_back({x, false});
      for (ArgumentIndex w : f_.attacker_list(z)) moves.push_back({w, true});
      found = true;
    });
    if (found) return true;

    if (task_.sigma == Semantics::stb) {
      const ArgumentSet uncovered = (e | hit).complement();
      if (uncovered.empty()) return false;
      const ArgumentIndex z = uncovered.first();
      moves.push_back({z, true});
      for (ArgumentIndex w : f_.attacker_list(z)) moves.push_back({w, true});
      return true;
    }

    if (task_.sigma == Semantics::com) {
      for (ArgumentIndex z = 0; z < f_.size(); ++z) {
        if (e.contains(z) || !f_.attackers_of(z).subset_of(hit)) continue;
        moves.push_back({z, true});
        ArgumentSet defenders(f_.size());
        for (ArgumentIndex a : f_.attacker_list(z)) defenders |= f_.attackers_of(a);
        defenders &= e;
        defenders.for_each([&](ArgumentIndex w) { moves.push_back({w, false}); });
        return true;
      }
    }
    return false;
  }

  const ArgumentationFramework& f_;
  Task task_;
  std::size_t nodes_ = 0;
};

inline SolveResult run_task(const ArgumentationFramework& f, Task task) {
  const auto start = std::chrono::steady_clock::now();
  Search search(f, std::move(task));
  SolveResult r;
  r.witness = search.run();
  r.answer = r.witness.has_value();
  r.stats.nodes = search.nodes();
  r.stats.candidates = search.nodes();
  r.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline SolveResult solve_repair(const ArgumentationFramework& f, const ArgumentSet& s,
                                Semantics sigma, int k) {
  Task t;
  t.sigma = sigma;
  t.base = s;
  t.budget = static_cast<std::size_t>(std::max(k, 0));
  t.nonempty = true;
  return run_task(f, std::move(t));
}

// Small is Repair around the empty set.
inline SolveResult solve_small(const ArgumentationFramework& f, Semantics sigma, int k) {
  return solve_repair(f, f.empty_set(), sigma, k);
}

inline SolveResult solve_adjust(const ArgumentationFramework& f, const ArgumentSet& e0,
                                ArgumentIndex target, Semantics sigma, int k,
                                bool nonempty = false) {
  Task t;
  t.sigma = sigma;
  t.base = e0;
  t.budget = static_cast<std::size_t>(std::max(k, 0));
  t.nonempty = nonempty;
  t.forced_flips = {target};
  return run_task(f, std::move(t));
}

inline SolveResult solve_center(const ArgumentationFramework& f, const ArgumentSet& e1,
                                const ArgumentSet& e2, Semantics sigma, bool nonempty = false) {
  const std::size_t k = distance(e1, e2);
  if (!is_local(sigma))
    throw UnsupportedSemantics("branching engine supports adm, com and stb only, not " +
                               std::string(to_string(sigma)));
  if (k == 0) return SolveResult{};
  Task t;
  t.sigma = sigma;
  t.base = e1;
  t.budget = k - 1;
  t.nonempty = nonempty;
  t.far_target = e2;
  t.far_limit = k - 1;
  return run_task(f, std::move(t));
}

inline SolveResult solve(const ProblemInstance& p) {
  switch (p.kind()) {
    case ProblemKind::small: return solve_small(p.framework(), p.semantics(), p.parameter());
    case ProblemKind::repair:
      return solve_repair(p.framework(), p.repair_set(), p.semantics(), p.parameter());
    case ProblemKind::adjust:
      return solve_adjust(p.framework(), p.e0(), p.target(), p.semantics(), p.parameter(),
                          p.require_nonempty());
    case ProblemKind::center:
      return solve_center(p.framework(), p.e1(), p.e2(), p.semantics(), p.require_nonempty());
  }
  return {};
}

}  // namespace branching
}  // namespace argudyn
