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

#include <chrono>
#include <string>

#include "argudyn/fo/builders.hpp"
#include "argudyn/fo/evaluate.hpp"
#include "argudyn/fo/structure.hpp"
#include "argudyn/problem.hpp"

namespace argudyn::fo_engine {

namespace detail {

inline ArgumentSet assigned_elements(std::size_t n, const fo::Assignment& a) {
  ArgumentSet d(n);
  for (const auto& [name, value] : a) d.insert(value);
  return d;
}

}  // namespace detail

// Decides an instance by evaluating its first-order formula; witnesses are
// read off the leading existential block. Repair uses the corrected formula,
// tried one delta bound at a time.
inline SolveResult solve(const ProblemInstance& p) {
  const auto start = std::chrono::steady_clock::now();
  fo::require_first_order(p.semantics());
  const fo::Structure s = fo::build_structure(p);
  const std::size_t n = p.framework().size();
  const int k = p.parameter();
  SolveResult r;

  auto attempt = [&](const fo::Formula& f, const ArgumentSet& base) {
    const fo::WitnessSearch w = fo::find_witness(s, f);
    r.stats.nodes += w.assignments_tried;
    r.stats.candidates += w.assignments_tried;
    if (!w.witness) return false;
    r.answer = true;
    r.witness = base ^ detail::assigned_elements(n, *w.witness);
    return true;
  };

  switch (p.kind()) {
    case ProblemKind::small:
      if (k >= 1) attempt(fo::small_formula(p.semantics(), k), p.framework().empty_set());
      break;
    case ProblemKind::repair:
      for (int l = 0; l <= k && !r.answer; ++l)
        attempt(fo::corrected_repair_disjunct(p.semantics(), l), p.repair_set());
      break;
    case ProblemKind::adjust:
      if (k >= 1)
        attempt(fo::adjust_formula(p.semantics(), k, p.require_nonempty()), p.e0());
      break;
    case ProblemKind::center:
      if (k >= 2)
        attempt(fo::center_formula(p.semantics(), k, p.require_nonempty()), p.e1());
      break;
  }
  r.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace argudyn::fo_engine
