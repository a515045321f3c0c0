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
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "argudyn/errors.hpp"
#include "argudyn/framework.hpp"
#include "argudyn/gadgets/cnf.hpp"
#include "argudyn/gadgets/graph.hpp"
#include "argudyn/problem.hpp"
#include "argudyn/semantics.hpp"

namespace argudyn::gadgets {

// 64-bit FNV-1a, hex encoded; identifies the source object of a gadget.
inline std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline std::string describe(const ArgumentationFramework& f) {
  std::string out;
  for (const auto& n : f.names()) out += "arg(" + n + ").";
  for (const auto& [a, b] : f.attacks()) out += "att(" + f.name(a) + "," + f.name(b) + ").";
  return out;
}

inline std::string describe(const KPartiteGraph& g) {
  std::string out;
  for (const auto& p : g.parts()) {
    out += "[";
    for (const auto& v : p) out += v + ",";
    out += "]";
  }
  for (const auto& [u, v] : g.edges()) out += "{" + u + "," + v + "}";
  return out;
}

// Result of a reduction: the framework, the problem it poses, and the names
// of the gadget roles.
struct GadgetOutput {
  std::string generator;
  std::string source_digest;
  ArgumentationFramework framework;
  ProblemKind kind = ProblemKind::small;
  int k = 0;
  std::vector<std::string> e0;  // Adjust start set
  std::string target;           // Adjust target
  std::vector<std::string> e1;  // Center endpoints
  std::vector<std::string> e2;
  std::map<std::string, std::string> roles;  // role -> argument
  std::map<std::string, std::vector<std::string>> role_sets;
  std::map<std::string, std::string> params;

  ProblemInstance instance(Semantics sigma, bool require_nonempty = false) const {
    switch (kind) {
      case ProblemKind::small: return ProblemInstance::small(framework, sigma, k);
      case ProblemKind::repair:
        return ProblemInstance::repair(framework, framework.empty_set(), sigma, k);
      case ProblemKind::adjust:
        return ProblemInstance::adjust(framework, framework.set_of(e0),
                                       framework.index_of(target), sigma, k, require_nonempty);
      case ProblemKind::center:
        return ProblemInstance::center(framework, framework.set_of(e1), framework.set_of(e2),
                                       sigma, require_nonempty);
    }
    throw InvalidInstance("unknown problem kind");
  }
};

namespace detail {

// First of stem, stem_1, stem_2, ... not yet declared.
inline std::string fresh_name(const ArgumentationFramework::Builder& b, const std::string& stem) {
  if (!b.has_argument(stem)) return stem;
  for (std::size_t i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!b.has_argument(candidate)) return candidate;
  }
}

inline ArgumentationFramework::Builder copy_of(const ArgumentationFramework& f) {
  ArgumentationFramework::Builder b;
  for (const auto& n : f.names()) b.add_argument(n);
  for (const auto& [x, y] : f.attacks()) b.add_attack(x, y);
  return b;
}

// Left-complete binary tree with `leaves` leaves rooted at `root`, every edge
// subdivided once. Nodes are heap-indexed (children of i are 2i+1, 2i+2);
// node 0 is `root`. Returns leaves left to right.
struct TreeSpec {
  std::string prefix;
  bool towards_root;      // edge direction
  bool nodes_self_attack; // otherwise the subdividers self-attack
};

inline std::vector<ArgumentIndex> add_subdivided_tree(ArgumentationFramework::Builder& b,
                                                      ArgumentIndex root, std::size_t leaves,
                                                      const TreeSpec& spec,
                                                      std::map<std::string, std::string>& roles) {
  if (leaves == 0) return {};
  const std::size_t count = 2 * leaves - 1;
  std::vector<ArgumentIndex> node(count);
  node[0] = root;
  if (spec.nodes_self_attack) b.ensure_attack(root, root);
  for (std::size_t i = 1; i < count; ++i) {
    const std::string node_name = spec.prefix + "_node_" + std::to_string(i);
    const std::string sub_name = spec.prefix + "_sub_" + std::to_string(i);
    node[i] = b.add_argument(node_name);
    const ArgumentIndex sub = b.add_argument(sub_name);
    const ArgumentIndex parent = node[(i - 1) / 2];
    if (spec.towards_root) {
      b.add_attack(node[i], sub);
      b.add_attack(sub, parent);
    } else {
      b.add_attack(parent, sub);
      b.add_attack(sub, node[i]);
    }
    if (spec.nodes_self_attack) b.add_attack(node[i], node[i]);
    else b.add_attack(sub, sub);
  }
  std::vector<ArgumentIndex> out;
  auto in_order = [&](auto&& self, std::size_t i) -> void {
    if (i >= count) return;
    if (2 * i + 1 >= count) {
      out.push_back(node[i]);
      return;
    }
    self(self, 2 * i + 1);
    self(self, 2 * i + 2);
  };
  in_order(in_order, 0);
  for (std::size_t j = 0; j < out.size(); ++j)
    roles[spec.prefix + "_leaf_" + std::to_string(j + 1)] = b.name(out[j]);
  return out;
}

}  // namespace detail

// Small instance with parameter k (number of parts): one argument y_v per
// vertex and z_v_j per vertex v and foreign part j. Nonempty admissible sets
// are exactly the vertex sets of multicolored cliques.
inline GadgetOutput gen_mcq_small(const KPartiteGraph& g) {
  const std::size_t k = g.part_count();
  if (k < 2) throw InvalidInstance("clique gadget needs at least 2 parts");
  ArgumentationFramework::Builder b;
  GadgetOutput out;
  auto y = [](const std::string& v) { return "y_" + v; };
  auto z = [](const std::string& v, std::size_t j) { return "z_" + v + "_" + std::to_string(j + 1); };
  for (const auto& p : g.parts())
    for (const auto& v : p) out.roles["y_" + v] = b.name(b.add_argument(y(v)));
  for (std::size_t i = 0; i < k; ++i)
    for (const auto& v : g.part(i))
      for (std::size_t j = 0; j < k; ++j)
        if (j != i) out.roles["z_" + v + "^" + std::to_string(j + 1)] = b.name(b.add_argument(z(v, j)));

  for (std::size_t i = 0; i < k; ++i) {
    const auto& part = g.part(i);
    for (const auto& v : part) {
      for (const auto& u : part)
        if (u != v) b.add_attack(y(v), y(u));
      for (std::size_t j = 0; j < k; ++j) {
        if (j == i) continue;
        b.add_attack(z(v, j), z(v, j));
        b.add_attack(z(v, j), y(v));
        for (const auto& u : part)
          if (u != v) b.add_attack(y(v), z(u, j));
      }
    }
  }
  for (const auto& [a, c] : g.edges()) {
    const std::size_t ia = g.part_of(a);
    const std::size_t ic = g.part_of(c);
    b.add_attack(y(a), z(c, ia));
    b.add_attack(y(c), z(a, ic));
  }
  out.generator = "mcq-small";
  out.source_digest = digest(describe(g));
  out.framework = b.build();
  out.kind = ProblemKind::small;
  out.k = static_cast<int>(k);
  out.params["parts"] = std::to_string(k);
  out.params["vertices"] = std::to_string(g.vertex_count());
  out.params["edges"] = std::to_string(g.edges().size());
  return out;
}

// Adjust instance (F', {t}, t, k+1) where t attacks and is attacked by every
// argument of F.
inline GadgetOutput gen_adjust_from_small(const ArgumentationFramework& f, int k) {
  if (k < 0) throw InvalidInstance("k must be nonnegative");
  auto b = detail::copy_of(f);
  const std::string t = detail::fresh_name(b, "t");
  const ArgumentIndex ti = b.add_argument(t);
  for (ArgumentIndex x = 0; x < f.size(); ++x) {
    b.add_attack(ti, x);
    b.add_attack(x, ti);
  }
  GadgetOutput out;
  out.generator = "adjust-from-small";
  out.source_digest = digest(describe(f) + "k=" + std::to_string(k));
  out.framework = b.build();
  out.kind = ProblemKind::adjust;
  out.k = k + 1;
  out.e0 = {t};
  out.target = t;
  out.roles["t"] = t;
  out.params["source_k"] = std::to_string(k);
  return out;
}

// Center instance (F', {t} + W', {t'} + W) for even k; the endpoints are at
// distance 2k+2.
inline GadgetOutput gen_center_from_small(const ArgumentationFramework& f, int k) {
  if (k < 0) throw InvalidInstance("k must be nonnegative");
  if (k % 2 != 0) throw OddK(k);
  auto b = detail::copy_of(f);
  const std::size_t n = f.size();
  const auto kk = static_cast<std::size_t>(k);
  auto add = [&](const std::string& stem) { return b.add_argument(detail::fresh_name(b, stem)); };
  const ArgumentIndex t = add("t");
  const ArgumentIndex tp = add("tp");
  std::vector<ArgumentIndex> w, wp, z, zp;
  for (std::size_t i = 1; i <= kk; ++i) w.push_back(add("w_" + std::to_string(i)));
  for (std::size_t i = 1; i <= kk; ++i) wp.push_back(add("wp_" + std::to_string(i)));
  for (std::size_t i = 1; i <= kk; ++i) z.push_back(add("z_" + std::to_string(i)));
  for (std::size_t i = 1; i <= kk; ++i) zp.push_back(add("zp_" + std::to_string(i)));

  for (ArgumentIndex x = 0; x < n; ++x) {
    b.add_attack(t, x);
    b.add_attack(tp, x);
  }
  b.add_attack(t, tp);
  b.add_attack(tp, t);
  for (std::size_t i = 0; i < kk; ++i)
    for (ArgumentIndex s : {z[i], zp[i]}) {
      b.add_attack(t, s);
      b.add_attack(tp, s);
    }
  for (std::size_t i = 0; i < kk; ++i) {
    b.add_attack(w[i], t);
    b.add_attack(w[i], wp[i]);
    b.add_attack(wp[i], tp);
    b.add_attack(wp[i], w[i]);
    b.add_attack(z[i], z[i]);
    b.add_attack(zp[i], zp[i]);
    b.add_attack(z[i], w[i]);
    b.add_attack(z[i], wp[i]);
    for (ArgumentIndex x = 0; x < n; ++x) b.add_attack(x, z[i]);
    b.add_attack(w[i], zp[i]);
    b.add_attack(wp[i], zp[i]);
    for (ArgumentIndex x = 0; x < n; ++x) b.add_attack(zp[i], x);
  }

  GadgetOutput out;
  out.generator = "center-from-small";
  out.source_digest = digest(describe(f) + "k=" + std::to_string(k));
  out.kind = ProblemKind::center;
  out.k = 2 * k + 2;
  out.roles["t"] = b.name(t);
  out.roles["t'"] = b.name(tp);
  std::vector<std::string> w_names, wp_names, scaffold;
  for (std::size_t i = 0; i < kk; ++i) {
    const std::string idx = std::to_string(i + 1);
    out.roles["w_" + idx] = b.name(w[i]);
    out.roles["w'_" + idx] = b.name(wp[i]);
    out.roles["z_" + idx] = b.name(z[i]);
    out.roles["z'_" + idx] = b.name(zp[i]);
    w_names.push_back(b.name(w[i]));
    wp_names.push_back(b.name(wp[i]));
    scaffold.push_back(i < kk / 2 ? b.name(w[i]) : b.name(wp[i]));
  }
  out.e1 = {b.name(t)};
  out.e1.insert(out.e1.end(), wp_names.begin(), wp_names.end());
  out.e2 = {b.name(tp)};
  out.e2.insert(out.e2.end(), w_names.begin(), w_names.end());
  out.role_sets["E0"] = scaffold;
  out.role_sets["W"] = w_names;
  out.role_sets["W'"] = wp_names;
  out.framework = b.build();
  out.params["source_k"] = std::to_string(k);
  out.params["threshold"] = std::to_string(2 * k + 1);
  return out;
}

namespace detail {

// The degree-reduced unsatisfiability gadget; `isolated` adds the argument e.
inline ArgumentationFramework::Builder cnf_base(const ThreeCnfTwoFormula& phi, bool isolated,
                                                std::map<std::string, std::string>& roles) {
  ArgumentationFramework::Builder b;
  const std::size_t m = phi.clause_count();
  const auto n = static_cast<std::size_t>(phi.variable_count());
  const ArgumentIndex root = b.add_argument("phi");
  const ArgumentIndex root_bar = b.add_argument("phibar");
  roles["Phi"] = "phi";
  roles["Phi_bar"] = "phibar";
  std::vector<ArgumentIndex> clause(m), pos(n), neg(n);
  for (std::size_t j = 0; j < m; ++j) {
    clause[j] = b.add_argument("C_" + std::to_string(j + 1));
    roles["C_" + std::to_string(j + 1)] = b.name(clause[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    pos[i] = b.add_argument("x_" + std::to_string(i + 1));
    neg[i] = b.add_argument("nx_" + std::to_string(i + 1));
    roles["x_" + std::to_string(i + 1)] = b.name(pos[i]);
    roles["not_x_" + std::to_string(i + 1)] = b.name(neg[i]);
  }
  if (isolated) {
    b.add_argument("e");
    roles["e"] = "e";
  }

  b.add_attack(root_bar, root_bar);
  b.add_attack(root, root_bar);
  for (std::size_t j = 0; j < m; ++j) {
    b.add_attack(clause[j], clause[j]);
    for (int lit : phi.clauses()[j]) {
      const auto v = static_cast<std::size_t>(std::abs(lit)) - 1;
      b.add_attack(lit > 0 ? pos[v] : neg[v], clause[j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    b.add_attack(pos[i], neg[i]);
    b.add_attack(neg[i], pos[i]);
  }

  const auto clause_leaves =
      add_subdivided_tree(b, root, m, TreeSpec{"B_phi", true, false}, roles);
  for (std::size_t j = 0; j < m; ++j) b.add_attack(clause[j], clause_leaves[j]);
  const auto literal_leaves =
      add_subdivided_tree(b, root_bar, 2 * n, TreeSpec{"B_nphi", false, true}, roles);
  for (std::size_t i = 0; i < n; ++i) {
    b.add_attack(literal_leaves[i], pos[i]);
    b.add_attack(literal_leaves[n + i], neg[i]);
  }
  return b;
}

inline void describe_cnf(GadgetOutput& out, const ThreeCnfTwoFormula& phi) {
  out.source_digest = digest(phi.to_dimacs());
  out.params["variables"] = std::to_string(phi.variable_count());
  out.params["clauses"] = std::to_string(phi.clause_count());
  out.params["max_degree"] = std::to_string(max_degree(out.framework));
}

}  // namespace detail

// Small instance with k = 1: for prf and sem there is an extension of size 1
// iff the formula is unsatisfiable.
inline GadgetOutput gen_cnf_small(const ThreeCnfTwoFormula& phi) {
  GadgetOutput out;
  auto b = detail::cnf_base(phi, true, out.roles);
  out.generator = "cnf-small";
  out.framework = b.build();
  out.kind = ProblemKind::small;
  out.k = 1;
  detail::describe_cnf(out, phi);
  return out;
}

// Adjust instance (F', {t1}, t1, 2).
inline GadgetOutput gen_cnf_adjust(const ThreeCnfTwoFormula& phi) {
  GadgetOutput out;
  auto b = detail::cnf_base(phi, false, out.roles);
  const ArgumentIndex root = b.index_of("phi");
  const ArgumentIndex t1 = b.add_argument("t1");
  const ArgumentIndex t1p = b.add_argument("t1p");
  const ArgumentIndex t2 = b.add_argument("t2");
  const ArgumentIndex t2p = b.add_argument("t2p");
  b.add_attack(t1, root);
  b.add_attack(root, t1);
  b.add_attack(t1, t2);
  b.add_attack(t2, t1);
  b.add_attack(t1, t1p);
  b.add_attack(t2, t2p);
  b.add_attack(t1p, t1p);
  b.add_attack(t2p, t2p);
  out.roles["t_1"] = "t1";
  out.roles["t_1'"] = "t1p";
  out.roles["t_2"] = "t2";
  out.roles["t_2'"] = "t2p";
  out.generator = "cnf-adjust";
  out.framework = b.build();
  out.kind = ProblemKind::adjust;
  out.k = 2;
  out.e0 = {"t1"};
  out.target = "t1";
  detail::describe_cnf(out, phi);
  return out;
}

// Center instance (F', {t, w1', w2'}, {t', w1, w2}) at distance 6. The
// attack from w2' goes to t' (the mirror of w1' -> t'); towards t it would
// put a conflict inside the first endpoint.
inline GadgetOutput gen_cnf_center(const ThreeCnfTwoFormula& phi) {
  GadgetOutput out;
  auto b = detail::cnf_base(phi, false, out.roles);
  const ArgumentIndex root = b.index_of("phi");
  std::map<std::string, ArgumentIndex> a;
  for (const char* name : {"t", "tp", "w1", "w2", "w1p", "w2p", "z", "zp", "z1", "z1p", "z2", "z2p"})
    a[name] = b.add_argument(name);
  const std::vector<std::pair<const char*, const char*>> attacks = {
      {"t", "z"},   {"z", "z"},     {"tp", "zp"},   {"zp", "zp"},   {"w1", "z1"},
      {"z1", "z1"}, {"w1p", "z1p"}, {"z1p", "z1p"}, {"w2", "z2"},   {"z2", "z2"},
      {"w2p", "z2p"}, {"z2p", "z2p"}, {"t", "tp"},  {"tp", "t"},    {"w1", "w1p"},
      {"w1p", "w1"}, {"w2", "w2p"},  {"w2p", "w2"}, {"w1", "t"},    {"w2", "t"},
      {"w1p", "tp"}, {"w2p", "tp"}};
  for (const auto& [x, y] : attacks) b.add_attack(a[x], a[y]);
  for (const char* s : {"t", "tp"}) {
    b.add_attack(a[s], root);
    b.add_attack(root, a[s]);
  }
  for (const auto& [role, name] : std::map<std::string, std::string>{
           {"t", "t"}, {"t'", "tp"}, {"w_1", "w1"}, {"w_2", "w2"}, {"w_1'", "w1p"},
           {"w_2'", "w2p"}, {"z", "z"}, {"z'", "zp"}, {"z_1", "z1"}, {"z_1'", "z1p"},
           {"z_2", "z2"}, {"z_2'", "z2p"}})
    out.roles[role] = name;
  out.generator = "cnf-center";
  out.framework = b.build();
  out.kind = ProblemKind::center;
  out.k = 6;
  out.e1 = {"t", "w1p", "w2p"};
  out.e2 = {"tp", "w1", "w2"};
  detail::describe_cnf(out, phi);
  return out;
}

}  // namespace argudyn::gadgets
