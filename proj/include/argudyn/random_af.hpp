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

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "argudyn/framework.hpp"

namespace argudyn {

// Arguments a0..a{n-1}; each ordered pair of distinct arguments is an attack
// with probability attack_probability, each self-attack with
// self_attack_probability.
inline ArgumentationFramework random_framework(std::size_t n, double attack_probability,
                                               double self_attack_probability,
                                               std::mt19937_64& rng) {
  std::bernoulli_distribution attack(attack_probability);
  std::bernoulli_distribution self(self_attack_probability);
  ArgumentationFramework::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.add_argument("a" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j ? self(rng) : attack(rng)) b.add_attack(i, j);
  return b.build();
}

inline ArgumentSet random_subset(std::size_t n, double probability, std::mt19937_64& rng) {
  std::bernoulli_distribution pick(probability);
  ArgumentSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if (pick(rng)) s.insert(i);
  return s;
}

}  // namespace argudyn
