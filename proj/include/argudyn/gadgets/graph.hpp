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
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "argudyn/errors.hpp"
#include "argudyn/framework.hpp"

namespace argudyn::gadgets {

// Graph whose vertices are split into parts with no edge inside a part.
class KPartiteGraph {
 public:
  using Edge = std::pair<std::string, std::string>;

  KPartiteGraph(std::vector<std::vector<std::string>> parts, const std::vector<Edge>& edges)
      : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (const auto& v : parts_[i]) {
        if (!is_valid_argument_name(v)) throw InvalidInstance("invalid vertex name '" + v + "'");
        if (!part_of_.emplace(v, i).second) throw InvalidInstance("vertex '" + v + "' repeated");
      }
    for (const auto& [u, v] : edges) {
      const std::size_t pu = part_of(u);
      const std::size_t pv = part_of(v);
      if (pu == pv) throw InvalidInstance("edge {" + u + "," + v + "} inside a part");
      if (!edges_.insert(normalized(u, v)).second)
        throw InvalidInstance("edge {" + u + "," + v + "} repeated");
    }
  }

  std::size_t part_count() const noexcept { return parts_.size(); }
  const std::vector<std::vector<std::string>>& parts() const noexcept { return parts_; }
  const std::vector<std::string>& part(std::size_t i) const { return parts_.at(i); }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return part_of_.size(); }

  std::size_t part_of(const std::string& v) const {
    auto it = part_of_.find(v);
    if (it == part_of_.end()) throw InvalidInstance("unknown vertex '" + v + "'");
    return it->second;
  }

  bool adjacent(const std::string& u, const std::string& v) const {
    return edges_.count(normalized(u, v)) > 0;
  }

  // One vertex per part, pairwise adjacent; brute force over all choices.
  std::optional<std::vector<std::string>> multicolored_clique() const {
    if (parts_.empty()) return std::vector<std::string>{};
    std::vector<std::string> chosen;
    if (extend(chosen)) return chosen;
    return std::nullopt;
  }

  bool has_multicolored_clique() const { return multicolored_clique().has_value(); }

 private:
  static Edge normalized(const std::string& u, const std::string& v) {
    return u < v ? Edge{u, v} : Edge{v, u};
  }

  bool extend(std::vector<std::string>& chosen) const {
    if (chosen.size() == parts_.size()) return true;
    for (const auto& v : parts_[chosen.size()]) {
      if (!std::all_of(chosen.begin(), chosen.end(),
                       [&](const std::string& u) { return adjacent(u, v); }))
        continue;
      chosen.push_back(v);
      if (extend(chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  std::vector<std::vector<std::string>> parts_;
  std::map<std::string, std::size_t> part_of_;
  std::set<Edge> edges_;
};

// Two disjoint copies of G plus every edge between the copies: a 2k-partite
// graph with a multicolored 2k-clique iff G has a multicolored k-clique.
inline KPartiteGraph even_k_duplicate(const KPartiteGraph& g) {
  std::vector<std::vector<std::string>> parts;
  for (const char* suffix : {"_a", "_b"})
    for (const auto& p : g.parts()) {
      std::vector<std::string> copy;
      for (const auto& v : p) copy.push_back(v + suffix);
      parts.push_back(std::move(copy));
    }
  std::vector<KPartiteGraph::Edge> edges;
  for (const char* suffix : {"_a", "_b"})
    for (const auto& [u, v] : g.edges()) edges.emplace_back(u + suffix, v + suffix);
  for (const auto& pa : g.parts())
    for (const auto& u : pa)
      for (const auto& pb : g.parts())
        for (const auto& v : pb) edges.emplace_back(u + "_a", v + "_b");
  return KPartiteGraph(std::move(parts), edges);
}

// Parts of uniform size in [1, max_part_size], each cross-part edge kept with
// probability edge_probability. Vertices are named p<i>v<j>.
inline KPartiteGraph random_kpartite(std::size_t k, std::size_t max_part_size,
                                     double edge_probability, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> size_dist(1, std::max<std::size_t>(1, max_part_size));
  std::bernoulli_distribution keep(edge_probability);
  std::vector<std::vector<std::string>> parts(k);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t size = size_dist(rng);
    for (std::size_t j = 1; j <= size; ++j)
      parts[i].push_back("p" + std::to_string(i + 1) + "v" + std::to_string(j));
  }
  std::vector<KPartiteGraph::Edge> edges;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      for (const auto& u : parts[i])
        for (const auto& v : parts[j])
          if (keep(rng)) edges.emplace_back(u, v);
  return KPartiteGraph(std::move(parts), edges);
}

}  // namespace argudyn::gadgets
