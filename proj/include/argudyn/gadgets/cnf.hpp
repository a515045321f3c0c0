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
#include <cstddef>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "argudyn/errors.hpp"

namespace argudyn::gadgets {

// CNF with at most 3 literals per clause and every literal in at most 2
// clauses. Literals use DIMACS numbering: +v / -v for variable v in 1..n.
class ThreeCnfTwoFormula {
 public:
  using Clause = std::vector<int>;

  ThreeCnfTwoFormula(int variables, std::vector<Clause> clauses)
      : variables_(variables), clauses_(std::move(clauses)) {
    if (variables_ < 0) throw NotThreeCnfTwo("negative variable count");
    std::map<int, int> occurrences;
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
      const Clause& c = clauses_[j];
      if (c.size() > 3)
        throw NotThreeCnfTwo("clause " + std::to_string(j + 1) + " has more than 3 literals");
      std::set<int> seen;
      for (int lit : c) {
        if (lit == 0 || std::abs(lit) > variables_)
          throw NotThreeCnfTwo("literal " + std::to_string(lit) + " out of range");
        if (!seen.insert(lit).second)
          throw NotThreeCnfTwo("literal " + std::to_string(lit) + " repeated in clause " +
                               std::to_string(j + 1));
        if (++occurrences[lit] > 2)
          throw NotThreeCnfTwo("literal " + std::to_string(lit) + " occurs in more than 2 clauses");
      }
    }
  }

  int variable_count() const noexcept { return variables_; }
  std::size_t clause_count() const noexcept { return clauses_.size(); }
  const std::vector<Clause>& clauses() const noexcept { return clauses_; }

  std::string to_dimacs() const {
    std::string out = "p cnf " + std::to_string(variables_) + " " +
                      std::to_string(clauses_.size()) + "\n";
    for (const auto& c : clauses_) {
      for (int lit : c) out += std::to_string(lit) + " ";
      out += "0\n";
    }
    return out;
  }

  friend bool operator==(const ThreeCnfTwoFormula&, const ThreeCnfTwoFormula&) = default;

 private:
  int variables_;
  std::vector<Clause> clauses_;
};

inline constexpr int kSatOracleMaxVariables = 20;

// Exhaustive satisfiability over all 2^n assignments.
inline bool sat_oracle(const ThreeCnfTwoFormula& phi) {
  const int n = phi.variable_count();
  if (n > kSatOracleMaxVariables)
    throw CapExceeded(static_cast<std::size_t>(n), kSatOracleMaxVariables);
  for (unsigned long bits = 0; bits < (1UL << n); ++bits) {
    bool all = true;
    for (const auto& c : phi.clauses()) {
      bool any = false;
      for (int lit : c) {
        const bool value = (bits >> (std::abs(lit) - 1)) & 1UL;
        if (value == (lit > 0)) {
          any = true;
          break;
        }
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

// Clauses of uniform size in [1, 3] with uniformly drawn literals; a draw is
// rejected when it repeats a literal in the clause or exceeds the occurrence
// cap.
inline ThreeCnfTwoFormula random_three_cnf_two(int variables, int clauses, std::mt19937_64& rng) {
  if (variables < 1 || clauses < 0 || clauses > 4 * variables)
    throw InvalidInstance("no 3-CNF-2 formula with these dimensions");
  // Each literal has two free slots; clause sizes are capped so that every
  // later clause can still get one literal.
  std::vector<int> slots;
  for (int v = 1; v <= variables; ++v)
    for (int copy = 0; copy < 2; ++copy) {
      slots.push_back(v);
      slots.push_back(-v);
    }
  std::vector<ThreeCnfTwoFormula::Clause> out;
  std::uniform_int_distribution<int> size_dist(1, 3);
  for (int j = 0; j < clauses; ++j) {
    const int reserve = clauses - j - 1;
    int size = std::min(size_dist(rng), static_cast<int>(slots.size()) - reserve);
    ThreeCnfTwoFormula::Clause c;
    std::shuffle(slots.begin(), slots.end(), rng);
    for (auto it = slots.begin(); it != slots.end() && static_cast<int>(c.size()) < size;) {
      if (std::find(c.begin(), c.end(), *it) == c.end()) {
        c.push_back(*it);
        it = slots.erase(it);
      } else {
        ++it;
      }
    }
    out.push_back(std::move(c));
  }
  return ThreeCnfTwoFormula(variables, std::move(out));
}

}  // namespace argudyn::gadgets
