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
#include <tuple>
#include <vector>

#include "argudyn/enumerate.hpp"
#include "argudyn/problem.hpp"
#include "argudyn/solvers/combinations.hpp"

namespace argudyn {

// Reference decision procedures: enumerate the sets within the distance bound
// of the instance and test membership. Witnesses are reproducible: smallest
// distance, then cardinality, then lexicographic order.
namespace delta {

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Picks the first member of `pool` (sorted by the caller's key) that is a
// full extension. The local check has already been applied.
inline std::optional<ArgumentSet> first_extension(const ArgumentationFramework& f,
                                                  const std::vector<ArgumentSet>& pool,
                                                  Semantics sigma) {
  for (const auto& e : pool)
    if (is_local(sigma) || is_extension(f, e, sigma)) return e;
  return std::nullopt;
}

// Sets at one fixed distance from `base`, all sharing the distance key.
// Returns the canonical-first extension among them.
template <typename Generate>
std::optional<ArgumentSet> best_in_level(const ArgumentationFramework& f, Semantics sigma,
                                         bool nonempty, SolveStats& stats, Generate&& generate) {
  std::vector<ArgumentSet> pool;
  generate([&](const ArgumentSet& e) {
    ++stats.candidates;
    if (nonempty && e.empty()) return;
    if (passes_local_check(f, e, sigma)) pool.push_back(e);
  });
  std::sort(pool.begin(), pool.end(), canonical_less);
  return first_extension(f, pool, sigma);
}

inline std::vector<ArgumentIndex> all_arguments_except(std::size_t n,
                                                       std::optional<ArgumentIndex> skip) {
  std::vector<ArgumentIndex> out;
  for (ArgumentIndex i = 0; i < n; ++i)
    if (!skip || *skip != i) out.push_back(i);
  return out;
}

inline SolveResult finish(std::optional<ArgumentSet> witness, SolveStats stats,
                          const Stopwatch& clock) {
  SolveResult r;
  r.answer = witness.has_value();
  r.witness = std::move(witness);
  r.stats = stats;
  r.stats.nodes = stats.candidates;
  r.stats.wall_seconds = clock.seconds();
  return r;
}

}  // namespace detail

// Nonempty E in sigma(F) with |E| <= k; witness is canonical-first.
inline SolveResult solve_small(const ArgumentationFramework& f, Semantics sigma, int k) {
  detail::Stopwatch clock;
  SolveStats stats;
  const auto pool = detail::all_arguments_except(f.size(), std::nullopt);
  const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), f.size());
  std::optional<ArgumentSet> found;
  for (std::size_t size = 1; size <= limit && !found; ++size) {
    argudyn::detail::for_each_combination(pool, size, [&](const std::vector<ArgumentIndex>& pick) {
      ++stats.candidates;
      ArgumentSet e = ArgumentSet::of(f.size(), pick);
      if (passes_local_check(f, e, sigma) && (is_local(sigma) || is_extension(f, e, sigma))) {
        found = std::move(e);
        return true;
      }
      return false;
    });
  }
  return detail::finish(std::move(found), stats, clock);
}

// Nonempty E in sigma(F) with |E Δ S| <= k. Enumerates deltas D by size.
inline SolveResult solve_repair(const ArgumentationFramework& f, const ArgumentSet& s,
                                Semantics sigma, int k) {
  detail::Stopwatch clock;
  SolveStats stats;
  const auto pool = detail::all_arguments_except(f.size(), std::nullopt);
  const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), f.size());
  std::optional<ArgumentSet> found;
  for (std::size_t d = 0; d <= limit && !found; ++d) {
    found = detail::best_in_level(f, sigma, true, stats, [&](auto&& emit) {
      argudyn::detail::for_each_combination(pool, d, [&](const std::vector<ArgumentIndex>& pick) {
        emit(argudyn::detail::flipped(s, pick));
        return false;
      });
    });
  }
  return detail::finish(std::move(found), stats, clock);
}

// E in sigma(F) with |E Δ E0| <= k and t in E Δ E0: t is always in the delta.
inline SolveResult solve_adjust(const ArgumentationFramework& f, const ArgumentSet& e0,
                                ArgumentIndex t, Semantics sigma, int k, bool nonempty = false) {
  detail::Stopwatch clock;
  SolveStats stats;
  const auto pool = detail::all_arguments_except(f.size(), t);
  const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(std::max(k, 0)), f.size());
  std::optional<ArgumentSet> found;
  ArgumentSet start = e0;
  start.flip(t);
  for (std::size_t d = 1; d <= limit && !found; ++d) {
    found = detail::best_in_level(f, sigma, nonempty, stats, [&](auto&& emit) {
      argudyn::detail::for_each_combination(pool, d - 1, [&](const std::vector<ArgumentIndex>& pick) {
        emit(argudyn::detail::flipped(start, pick));
        return false;
      });
    });
  }
  return detail::finish(std::move(found), stats, clock);
}

// E in sigma(F) strictly closer than dist(E1, E2) to both endpoints. With
// M = E1 Δ E2 and E = E1 Δ D, dist(E, E2) = |M| - |D ∩ M| + |D \ M|, so only
// deltas with |D \ M| < |D ∩ M| and |D| < |M| are generated. Candidates are
// ranked by the larger distance, then the distance sum, then canonically.
inline SolveResult solve_center(const ArgumentationFramework& f, const ArgumentSet& e1,
                                const ArgumentSet& e2, Semantics sigma, bool nonempty = false) {
  detail::Stopwatch clock;
  SolveStats stats;
  const std::size_t k = distance(e1, e2);
  if (k == 0) return detail::finish(std::nullopt, stats, clock);
  const ArgumentSet diff = e1 ^ e2;
  const auto inside = diff.members();
  const auto outside = diff.complement().members();

  struct Ranked {
    std::size_t far;
    std::size_t total;
    ArgumentSet set;
  };
  std::vector<Ranked> pool;
  for (std::size_t a = 1; a <= std::min(k - 1, inside.size()); ++a) {
    for (std::size_t b = 0; b < a && a + b <= k - 1; ++b) {
      argudyn::detail::for_each_combination(inside, a, [&](const std::vector<ArgumentIndex>& in_pick) {
        ArgumentSet partial = argudyn::detail::flipped(e1, in_pick);
        argudyn::detail::for_each_combination(outside, b, [&](const std::vector<ArgumentIndex>& out_pick) {
          ++stats.candidates;
          ArgumentSet e = argudyn::detail::flipped(partial, out_pick);
          if (nonempty && e.empty()) return false;
          if (!passes_local_check(f, e, sigma)) return false;
          const std::size_t d1 = a + b;
          const std::size_t d2 = k - a + b;
          pool.push_back({std::max(d1, d2), d1 + d2, std::move(e)});
          return false;
        });
        return false;
      });
    }
  }
  std::sort(pool.begin(), pool.end(), [](const Ranked& x, const Ranked& y) {
    if (x.far != y.far) return x.far < y.far;
    if (x.total != y.total) return x.total < y.total;
    return canonical_less(x.set, y.set);
  });
  std::optional<ArgumentSet> found;
  for (const auto& r : pool)
    if (is_local(sigma) || is_extension(f, r.set, sigma)) {
      found = r.set;
      break;
    }
  return detail::finish(std::move(found), stats, clock);
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

}  // namespace delta
}  // namespace argudyn
