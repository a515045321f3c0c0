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

#include <string>
#include <string_view>

#include "argudyn/solvers/branching.hpp"
#include "argudyn/solvers/delta.hpp"
#include "argudyn/solvers/fo_engine.hpp"

namespace argudyn {

enum class Engine { delta, branching, fo };

inline constexpr std::string_view to_string(Engine e) {
  switch (e) {
    case Engine::delta: return "delta";
    case Engine::branching: return "branching";
    case Engine::fo: return "fo";
  }
  return "?";
}

inline Engine parse_engine(std::string_view text) {
  if (text == "delta") return Engine::delta;
  if (text == "branching") return Engine::branching;
  if (text == "fo") return Engine::fo;
  throw InvalidInstance("unknown engine: " + std::string(text));
}

inline SolveResult solve(const ProblemInstance& p, Engine engine = Engine::delta) {
  switch (engine) {
    case Engine::delta: return delta::solve(p);
    case Engine::branching: return branching::solve(p);
    case Engine::fo: return fo_engine::solve(p);
  }
  return {};
}

}  // namespace argudyn
