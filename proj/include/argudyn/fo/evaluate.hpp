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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argudyn/errors.hpp"
#include "argudyn/fo/formula.hpp"
#include "argudyn/fo/structure.hpp"

namespace argudyn::fo {

using Assignment = std::map<std::string, std::size_t>;

namespace detail {

// Formula with variables resolved to slots and relations to bitsets.
class Compiled {
 public:
  Compiled(const Structure& s, const Formula& f, const std::vector<std::string>& parameters)
      : s_(s) {
    std::vector<std::pair<std::string, int>> scope;
    for (const auto& p : parameters) scope.emplace_back(p, slot_count_++);
    root_ = compile(f, scope);
  }

  int slot_count() const noexcept { return slot_count_; }

  bool eval(std::vector<std::size_t>& slots) const { return eval(root_, slots); }

 private:
  struct CNode {
    Op op;
    int a = -1;
    int b = -1;
    const ArgumentSet* relation = nullptr;
    std::vector<int> kids;
  };

  int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope) {
    CNode c{f.op()};
    auto lookup = [&](const std::string& v) {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == v) return it->second;
      throw UnboundVariable(v);
    };
    switch (f.op()) {
      case Op::equal:
      case Op::attack:
        c.a = lookup(f.variables()[0]);
        c.b = lookup(f.variables()[1]);
        break;
      case Op::unary:
        c.a = lookup(f.variables()[0]);
        c.relation = s_.find_unary(f.label());
        if (!c.relation) throw UnknownRelation(f.label());
        break;
      case Op::exists:
      case Op::forall:
        c.a = slot_count_++;
        scope.emplace_back(f.label(), c.a);
        c.kids.push_back(compile(f.child(0), scope));
        scope.pop_back();
        break;
      default:
        for (const auto& k : f.children()) c.kids.push_back(compile(k, scope));
        break;
    }
    nodes_.push_back(std::move(c));
    return static_cast<int>(nodes_.size()) - 1;
  }

  bool eval(int id, std::vector<std::size_t>& slots) const {
    const CNode& c = nodes_[static_cast<std::size_t>(id)];
    switch (c.op) {
      case Op::truth: return true;
      case Op::falsity: return false;
      case Op::equal: return slots[c.a] == slots[c.b];
      case Op::attack: return s_.related(slots[c.a], slots[c.b]);
      case Op::unary: return c.relation->contains(slots[c.a]);
      case Op::negation: return !eval(c.kids[0], slots);
      case Op::conjunction:
        for (int k : c.kids)
          if (!eval(k, slots)) return false;
        return true;
      case Op::disjunction:
        for (int k : c.kids)
          if (eval(k, slots)) return true;
        return false;
      case Op::implication: return !eval(c.kids[0], slots) || eval(c.kids[1], slots);
      case Op::exists:
        for (std::size_t e = 0; e < s_.size(); ++e) {
          slots[c.a] = e;
          if (eval(c.kids[0], slots)) return true;
        }
        return false;
      case Op::forall:
        for (std::size_t e = 0; e < s_.size(); ++e) {
          slots[c.a] = e;
          if (!eval(c.kids[0], slots)) return false;
        }
        return true;
    }
    return false;
  }

  const Structure& s_;
  std::vector<CNode> nodes_;
  int root_ = -1;
  int slot_count_ = 0;
};

}  // namespace detail

// Tarskian evaluation; quantifiers range over the whole universe.
inline bool evaluate(const Structure& s, const Formula& f, const Assignment& assignment = {}) {
  std::vector<std::string> params;
  std::vector<std::size_t> values;
  for (const auto& [name, value] : assignment) {
    if (value >= s.size()) throw InvalidInstance("assignment outside universe: " + name);
    params.push_back(name);
    values.push_back(value);
  }
  detail::Compiled c(s, f, params);
  std::vector<std::size_t> slots(static_cast<std::size_t>(c.slot_count()), 0);
  std::copy(values.begin(), values.end(), slots.begin());
  return c.eval(slots);
}

struct WitnessSearch {
  std::optional<Assignment> witness;
  std::size_t assignments_tried = 0;
};

// Splits off the leading block of existential quantifiers and searches
// assignments to it in lexicographic order.
inline WitnessSearch find_witness(const Structure& s, const Formula& f) {
  std::vector<std::string> block;
  const Formula* body = &f;
  while (body->op() == Op::exists) {
    block.push_back(body->label());
    body = &body->child(0);
  }
  detail::Compiled c(s, *body, block);
  std::vector<std::size_t> slots(static_cast<std::size_t>(c.slot_count()), 0);
  WitnessSearch out;
  if (!block.empty() && s.size() == 0) return out;
  const std::size_t width = block.size();
  while (true) {
    ++out.assignments_tried;
    if (c.eval(slots)) {
      Assignment a;
      for (std::size_t i = 0; i < width; ++i) a[block[i]] = slots[i];
      out.witness = std::move(a);
      return out;
    }
    // odometer over the block, last variable fastest
    std::size_t i = width;
    while (i > 0) {
      --i;
      if (++slots[i] < s.size()) break;
      slots[i] = 0;
      if (i == 0) return out;
    }
    if (width == 0) return out;
  }
}

}  // namespace argudyn::fo
