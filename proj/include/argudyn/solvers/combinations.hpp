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
#include <vector>

#include "argudyn/argument_set.hpp"

namespace argudyn::detail {

// Visits every size-`choose` subset of `pool` in lexicographic order of
// positions. The visitor returns true to stop early; the function returns
// true if it was stopped.
template <typename Visitor>
bool for_each_combination(const std::vector<ArgumentIndex>& pool, std::size_t choose,
                          Visitor&& visit) {
  const std::size_t n = pool.size();
  if (choose > n) return false;
  std::vector<std::size_t> pos(choose);
  for (std::size_t i = 0; i < choose; ++i) pos[i] = i;
  std::vector<ArgumentIndex> picked(choose);
  while (true) {
    for (std::size_t i = 0; i < choose; ++i) picked[i] = pool[pos[i]];
    if (visit(static_cast<const std::vector<ArgumentIndex>&>(picked))) return true;
    // advance
    std::size_t i = choose;
    while (i > 0 && pos[i - 1] == n - choose + (i - 1)) --i;
    if (i == 0) return false;
    ++pos[i - 1];
    for (std::size_t j = i; j < choose; ++j) pos[j] = pos[j - 1] + 1;
  }
}

inline ArgumentSet flipped(ArgumentSet base, const std::vector<ArgumentIndex>& delta) {
  for (auto x : delta) base.flip(x);
  return base;
}

}  // namespace argudyn::detail
