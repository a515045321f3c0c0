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
#include <cstdint>
#include <optional>
#include <vector>

namespace argudyn {

// Literal over variable v: +(v+1) for "v true", -(v+1) for "v false".
using Literal = int;

inline Literal pos(std::size_t v) { return static_cast<Literal>(v) + 1; }
inline Literal neg(std::size_t v) { return -(static_cast<Literal>(v) + 1); }

// Small DPLL search over clauses with unit propagation. The encodings fed to
// it have one variable per argument, so instances stay in the low hundreds of
// variables; decisions try "false" first, which finds the smallest-looking
// admissible sets quickly.
class ClauseSearch {
 public:
  explicit ClauseSearch(std::size_t variables) : vars_(variables) {}

  void add_clause(std::vector<Literal> clause) {
    if (clause.empty()) trivially_false_ = true;
    clauses_.push_back(std::move(clause));
  }
  void add_unit(Literal l) { clauses_.push_back({l}); }

  std::size_t variables() const noexcept { return vars_; }
  std::size_t decisions() const noexcept { return decisions_; }

  std::optional<std::vector<bool>> solve() {
    if (trivially_false_) return std::nullopt;
    occurrences_.assign(2 * vars_, {});
    for (std::size_t c = 0; c < clauses_.size(); ++c)
      for (Literal l : clauses_[c]) occurrences_[slot(l)].push_back(c);
    std::vector<std::int8_t> value(vars_, kUnset);
    if (!search(value)) return std::nullopt;
    std::vector<bool> model(vars_);
    for (std::size_t v = 0; v < vars_; ++v) model[v] = value[v] == kTrue;
    return model;
  }

 private:
  static constexpr std::int8_t kUnset = -1;
  static constexpr std::int8_t kFalse = 0;
  static constexpr std::int8_t kTrue = 1;

  static std::size_t var(Literal l) { return static_cast<std::size_t>(l > 0 ? l : -l) - 1; }
  std::size_t slot(Literal l) const { return 2 * var(l) + (l > 0 ? 0 : 1); }

  static std::int8_t eval(const std::vector<std::int8_t>& value, Literal l) {
    const auto v = value[var(l)];
    if (v == kUnset) return kUnset;
    return (l > 0) == (v == kTrue) ? kTrue : kFalse;
  }

  // Propagates units to a fixpoint, starting from every clause. Returns false
  // on conflict.
  bool propagate(std::vector<std::int8_t>& value) const {
    std::vector<std::size_t> queue(clauses_.size());
    for (std::size_t c = 0; c < clauses_.size(); ++c) queue[c] = c;
    std::vector<char> queued(clauses_.size(), 1);
    while (!queue.empty()) {
      const std::size_t c = queue.back();
      queue.pop_back();
      queued[c] = 0;
      Literal unit = 0;
      std::size_t open = 0;
      bool satisfied = false;
      for (Literal l : clauses_[c]) {
        const auto e = eval(value, l);
        if (e == kTrue) {
          satisfied = true;
          break;
        }
        if (e == kUnset) {
          ++open;
          unit = l;
        }
      }
      if (satisfied) continue;
      if (open == 0) return false;
      if (open == 1) {
        value[var(unit)] = unit > 0 ? kTrue : kFalse;
        // Clauses containing the now-false complement may have become unit.
        const Literal falsified = -unit;
        for (std::size_t d : occurrences_[slot(falsified)])
          if (!queued[d]) {
            queued[d] = 1;
            queue.push_back(d);
          }
      }
    }
    return true;
  }

  bool search(std::vector<std::int8_t>& value) {
    if (!propagate(value)) return false;
    std::size_t pick = vars_;
    for (std::size_t v = 0; v < vars_; ++v)
      if (value[v] == kUnset) {
        pick = v;
        break;
      }
    if (pick == vars_) return true;
    ++decisions_;
    for (std::int8_t choice : {kFalse, kTrue}) {
      auto trial = value;
      trial[pick] = choice;
      if (search(trial)) {
        value = std::move(trial);
        return true;
      }
    }
    return false;
  }

  std::size_t vars_;
  bool trivially_false_ = false;
  std::size_t decisions_ = 0;
  std::vector<std::vector<Literal>> clauses_;
  std::vector<std::vector<std::size_t>> occurrences_;
};

}  // namespace argudyn
