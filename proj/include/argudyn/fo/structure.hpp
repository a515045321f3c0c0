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
#include <string>
#include <utility>
#include <vector>

#include "argudyn/argument_set.hpp"
#include "argudyn/errors.hpp"
#include "argudyn/problem.hpp"

namespace argudyn::fo {

// Finite structure with universe {0..n-1}, one binary relation A and named
// unary relations.
class Structure {
 public:
  explicit Structure(std::vector<std::string> universe)
      : names_(std::move(universe)), rows_(names_.size(), ArgumentSet(names_.size())) {}

  explicit Structure(const ArgumentationFramework& f) : Structure(f.names()) {
    for (const auto& [from, to] : f.attacks()) add_pair(from, to);
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& universe() const noexcept { return names_; }

  void add_pair(std::size_t from, std::size_t to) {
    if (from >= size() || to >= size()) throw InvalidInstance("relation member outside universe");
    rows_[from].insert(to);
  }
  bool related(std::size_t from, std::size_t to) const { return rows_[from].contains(to); }
  const ArgumentSet& successors(std::size_t from) const { return rows_[from]; }

  void add_unary(const std::string& name, ArgumentSet members) {
    if (name == "A") throw InvalidInstance("unary relation may not be named A");
    if (members.universe() != size()) throw InvalidInstance("unary relation over wrong universe");
    if (!unary_.emplace(name, std::move(members)).second)
      throw InvalidInstance("duplicate unary relation " + name);
  }
  const ArgumentSet* find_unary(const std::string& name) const {
    auto it = unary_.find(name);
    return it == unary_.end() ? nullptr : &it->second;
  }
  const std::map<std::string, ArgumentSet>& unary_relations() const noexcept { return unary_; }

 private:
  std::vector<std::string> names_;
  std::vector<ArgumentSet> rows_;
  std::map<std::string, ArgumentSet> unary_;
};

inline Structure build_structure(const ProblemInstance& p) {
  Structure s(p.framework());
  const std::size_t n = p.framework().size();
  switch (p.kind()) {
    case ProblemKind::small: break;
    case ProblemKind::repair: s.add_unary("S", p.repair_set()); break;
    case ProblemKind::adjust: {
      s.add_unary("E0", p.e0());
      ArgumentSet t(n);
      t.insert(p.target());
      s.add_unary("T", std::move(t));
      break;
    }
    case ProblemKind::center:
      s.add_unary("E1", p.e1());
      s.add_unary("E2", p.e2());
      break;
  }
  return s;
}

// Maximum degree of the Gaifman graph; only A contributes edges.
inline std::size_t gaifman_max_degree(const Structure& s) {
  std::vector<ArgumentSet> nbrs(s.size(), ArgumentSet(s.size()));
  for (std::size_t x = 0; x < s.size(); ++x)
    s.successors(x).for_each([&](std::size_t y) {
      if (x == y) return;
      nbrs[x].insert(y);
      nbrs[y].insert(x);
    });
  std::size_t best = 0;
  for (const auto& nb : nbrs) best = std::max(best, nb.size());
  return best;
}

}  // namespace argudyn::fo
