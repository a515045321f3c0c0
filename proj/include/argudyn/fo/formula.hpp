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
#include <atomic>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace argudyn::fo {

enum class Op {
  truth,
  falsity,
  equal,        // x = y
  attack,       // A(x, y)
  unary,        // P(x)
  negation,
  conjunction,
  disjunction,
  implication,
  exists,
  forall,
};

class Formula;

struct Node {
  Op op = Op::truth;
  // relation name for unary atoms, bound variable for quantifiers
  std::string label;
  // variable operands of atoms
  std::vector<std::string> variables;
  std::vector<Formula> children;
};

// Immutable formula tree with structural sharing.
class Formula {
 public:
  Formula() : node_(std::make_shared<const Node>()) {}
  explicit Formula(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

  Op op() const noexcept { return node_->op; }
  const std::string& label() const noexcept { return node_->label; }
  const std::vector<std::string>& variables() const noexcept { return node_->variables; }
  const std::vector<Formula>& children() const noexcept { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }
  bool is_quantifier() const noexcept { return op() == Op::exists || op() == Op::forall; }

  std::set<std::string> free_variables() const {
    std::set<std::string> out;
    collect_free(out, {});
    return out;
  }

  std::size_t quantifier_depth() const {
    std::size_t d = 0;
    for (const auto& c : children()) d = std::max(d, c.quantifier_depth());
    return d + (is_quantifier() ? 1 : 0);
  }

  // number of nodes in the tree
  std::size_t length() const {
    std::size_t n = 1;
    for (const auto& c : children()) n += c.length();
    return n;
  }

  std::string dump() const {
    switch (op()) {
      case Op::truth: return "true";
      case Op::falsity: return "false";
      case Op::equal: return "(= " + variables()[0] + " " + variables()[1] + ")";
      case Op::attack: return "(A " + variables()[0] + " " + variables()[1] + ")";
      case Op::unary: return "(" + label() + " " + variables()[0] + ")";
      case Op::exists: return "(exists " + label() + " " + child(0).dump() + ")";
      case Op::forall: return "(forall " + label() + " " + child(0).dump() + ")";
      default: break;
    }
    std::string out = "(";
    out += op() == Op::negation ? "not" : op() == Op::conjunction ? "and"
         : op() == Op::disjunction ? "or" : "implies";
    for (const auto& c : children()) out += " " + c.dump();
    return out + ")";
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    return a.op() == b.op() && a.label() == b.label() && a.variables() == b.variables() &&
           a.children() == b.children();
  }

 private:
  void collect_free(std::set<std::string>& out, std::vector<std::string> bound) const {
    for (const auto& v : variables())
      if (std::find(bound.begin(), bound.end(), v) == bound.end()) out.insert(v);
    if (is_quantifier()) bound.push_back(label());
    for (const auto& c : children()) c.collect_free(out, bound);
  }

  std::shared_ptr<const Node> node_;
};

inline Formula truth() { return Formula(Node{Op::truth, {}, {}, {}}); }
inline Formula falsity() { return Formula(Node{Op::falsity, {}, {}, {}}); }
inline Formula equal(std::string x, std::string y) {
  return Formula(Node{Op::equal, {}, {std::move(x), std::move(y)}, {}});
}
inline Formula attack(std::string x, std::string y) {
  return Formula(Node{Op::attack, {}, {std::move(x), std::move(y)}, {}});
}
inline Formula unary(std::string relation, std::string x) {
  return Formula(Node{Op::unary, std::move(relation), {std::move(x)}, {}});
}
inline Formula negation(Formula f) { return Formula(Node{Op::negation, {}, {}, {std::move(f)}}); }
inline Formula implication(Formula a, Formula b) {
  return Formula(Node{Op::implication, {}, {}, {std::move(a), std::move(b)}});
}
inline Formula conjunction(std::vector<Formula> parts) {
  if (parts.empty()) return truth();
  if (parts.size() == 1) return parts.front();
  return Formula(Node{Op::conjunction, {}, {}, std::move(parts)});
}
inline Formula conjunction(Formula a, Formula b) {
  return conjunction(std::vector<Formula>{std::move(a), std::move(b)});
}
inline Formula disjunction(std::vector<Formula> parts) {
  if (parts.empty()) return falsity();
  if (parts.size() == 1) return parts.front();
  return Formula(Node{Op::disjunction, {}, {}, std::move(parts)});
}
inline Formula disjunction(Formula a, Formula b) {
  return disjunction(std::vector<Formula>{std::move(a), std::move(b)});
}
inline Formula exists(std::string x, Formula body) {
  return Formula(Node{Op::exists, std::move(x), {}, {std::move(body)}});
}
inline Formula forall(std::string x, Formula body) {
  return Formula(Node{Op::forall, std::move(x), {}, {std::move(body)}});
}
// Quantifier blocks; the first variable is outermost.
inline Formula exists_block(const std::vector<std::string>& xs, Formula body) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = exists(*it, std::move(body));
  return body;
}
inline Formula forall_block(const std::vector<std::string>& xs, Formula body) {
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) body = forall(*it, std::move(body));
  return body;
}

// Names of the form "<stem>#<n>" cannot be written by users (the parser and
// argument names only allow [A-Za-z0-9_]), so they never clash.
inline std::string fresh_variable(const std::string& stem) {
  static std::atomic<unsigned long long> counter{0};
  const std::string base = stem.substr(0, stem.find('#'));
  return base + "#" + std::to_string(++counter);
}

// Replaces free occurrences of `from` by `to`, renaming binders that would
// capture `to`.
inline Formula substitute(const Formula& f, const std::string& from, const std::string& to) {
  if (from == to) return f;
  if (f.is_quantifier()) {
    if (f.label() == from) return f;
    const Formula& body = f.child(0);
    if (f.label() == to) {
      if (!body.free_variables().count(from)) return f;
      const std::string renamed = fresh_variable(to);
      Formula inner = substitute(substitute(body, to, renamed), from, to);
      return Formula(Node{f.op(), renamed, {}, {std::move(inner)}});
    }
    return Formula(Node{f.op(), f.label(), {}, {substitute(body, from, to)}});
  }
  Node n{f.op(), f.label(), f.variables(), {}};
  for (auto& v : n.variables)
    if (v == from) v = to;
  for (const auto& c : f.children()) n.children.push_back(substitute(c, from, to));
  return Formula(std::move(n));
}

// A formula read as a predicate of one designated free variable.
struct Predicate {
  Formula body;
  std::string variable;

  Formula operator()(const std::string& at) const { return substitute(body, variable, at); }
};

// P(x) for a named unary relation.
inline Predicate relation_predicate(const std::string& relation) {
  return Predicate{unary(relation, "x"), "x"};
}

}  // namespace argudyn::fo
