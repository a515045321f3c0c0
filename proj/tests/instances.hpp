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

// Seeded random problem instances shared by the property tests and the
// acceptance run.

#include <optional>
#include <random>
#include <vector>

#include "argudyn/enumerate.hpp"
#include "argudyn/problem.hpp"
#include "argudyn/random_af.hpp"

namespace instances {

using namespace argudyn;

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

inline int random_k(int max_k, std::mt19937_64& rng) {
  return std::uniform_int_distribution<int>(0, max_k)(rng);
}

inline ProblemInstance random_small(const ArgumentationFramework& f, Semantics sigma, int max_k,
                                    std::mt19937_64& rng) {
  return ProblemInstance::small(f, sigma, random_k(max_k, rng));
}

inline ProblemInstance random_repair(const ArgumentationFramework& f, Semantics sigma, int max_k,
                                     std::mt19937_64& rng) {
  return ProblemInstance::repair(f, random_subset(f.size(), 0.4, rng), sigma, random_k(max_k, rng));
}

inline ProblemInstance random_adjust(const ArgumentationFramework& f, Semantics sigma, int max_k,
                                     std::mt19937_64& rng) {
  const auto exts = enumerate(f, sigma).extensions;
  const ArgumentSet e0 = pick(exts, rng);
  const auto t = std::uniform_int_distribution<std::size_t>(0, f.size() - 1)(rng);
  return ProblemInstance::adjust(f, e0, t, sigma, random_k(max_k, rng));
}

// Endpoints at distance between min_dist and max_dist when the framework has
// such a pair.
inline std::optional<ProblemInstance> random_center(const ArgumentationFramework& f,
                                                    Semantics sigma, std::size_t min_dist,
                                                    std::size_t max_dist, std::mt19937_64& rng) {
  const auto exts = enumerate(f, sigma).extensions;
  std::vector<std::pair<ArgumentSet, ArgumentSet>> pairs;
  for (const auto& a : exts)
    for (const auto& b : exts) {
      const std::size_t d = distance(a, b);
      if (d >= min_dist && d <= max_dist) pairs.emplace_back(a, b);
    }
  if (pairs.empty()) return std::nullopt;
  const auto& [a, b] = pick(pairs, rng);
  return ProblemInstance::center(f, a, b, sigma);
}

}  // namespace instances
