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
#include <vector>

#include "argudyn/errors.hpp"
#include "argudyn/fo/formula.hpp"
#include "argudyn/semantics.hpp"

namespace argudyn::fo {

// Witness variables bound by the problem formulas: x1..xl, plus t for Adjust.
inline std::vector<std::string> witness_variables(int l) {
  std::vector<std::string> xs;
  for (int i = 1; i <= l; ++i) xs.push_back("x" + std::to_string(i));
  return xs;
}

// SET over explicit element variables: y = v1 or ... or y = vl, in y.
inline Predicate set_predicate(const std::vector<std::string>& elements) {
  const std::string y = fresh_variable("y");
  std::vector<Formula> parts;
  for (const auto& v : elements) parts.push_back(equal(y, v));
  return Predicate{disjunction(std::move(parts)), y};
}

// SET[l] with free variables y, x1..xl.
inline Formula set_formula(int l) {
  if (l < 1) throw InvalidArity("SET needs at least one element variable");
  std::vector<Formula> parts;
  for (const auto& x : witness_variables(l)) parts.push_back(equal("y", x));
  return disjunction(std::move(parts));
}

inline Predicate set_of_predicate(int l) { return Predicate{set_formula(l), "y"}; }

inline Formula cf_of(const Predicate& phi) {
  const std::string x = fresh_variable("x");
  const std::string y = fresh_variable("y");
  return forall_block({x, y}, implication(conjunction(phi(x), phi(y)), negation(attack(x, y))));
}

inline Predicate sym_diff_of(const Predicate& phi1, const Predicate& phi2) {
  const std::string y = fresh_variable("y");
  return Predicate{disjunction(conjunction(phi1(y), negation(phi2(y))),
                               conjunction(negation(phi1(y)), phi2(y))),
                   y};
}

// At most k elements satisfy phi.
inline Formula at_most(const Predicate& phi, int k) {
  if (k < 0) throw InvalidArity("ATMOST bound must be nonnegative");
  std::vector<std::string> xs;
  for (int i = 0; i <= k; ++i) xs.push_back(fresh_variable("x"));
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) parts.push_back(negation(equal(xs[i], xs[j])));
  for (const auto& x : xs) parts.push_back(phi(x));
  return negation(exists_block(xs, conjunction(std::move(parts))));
}

inline Formula adm_of(const Predicate& phi) {
  const std::string x = fresh_variable("x");
  const std::string y = fresh_variable("y");
  const std::string z = fresh_variable("z");
  Formula defended = forall_block(
      {x, z},
      implication(conjunction({phi(x), negation(phi(z)), attack(z, x)}),
                  exists(y, conjunction(phi(y), attack(y, z)))));
  return conjunction(cf_of(phi), defended);
}

inline Formula com_of(const Predicate& phi) {
  const std::string z = fresh_variable("z");
  const std::string a = fresh_variable("a");
  const std::string x1 = fresh_variable("x");
  const std::string x2 = fresh_variable("x");
  Formula defended =
      forall(a, implication(attack(a, z), exists(x1, conjunction(phi(x1), attack(x1, a)))));
  Formula unrelated =
      forall(x2, implication(phi(x2), negation(disjunction(attack(x2, z), attack(z, x2)))));
  return conjunction(adm_of(phi),
                     forall(z, implication(conjunction(defended, unrelated), phi(z))));
}

inline Formula stb_of(const Predicate& phi) {
  const std::string z = fresh_variable("z");
  const std::string a = fresh_variable("a");
  return conjunction(cf_of(phi),
                     forall(z, disjunction(phi(z), exists(a, conjunction(phi(a), attack(a, z))))));
}

inline Formula sigma_of(Semantics sigma, const Predicate& phi) {
  switch (sigma) {
    case Semantics::adm: return adm_of(phi);
    case Semantics::com: return com_of(phi);
    case Semantics::stb: return stb_of(phi);
    default: break;
  }
  throw UnsupportedSemantics("no first-order formula for " + std::string(to_string(sigma)));
}

inline void require_first_order(Semantics sigma) {
  if (!is_local(sigma))
    throw UnsupportedSemantics("no first-order formula for " + std::string(to_string(sigma)));
}

// exists x1..xk sigma[SET[k]]
inline Formula small_formula(Semantics sigma, int k) {
  require_first_order(sigma);
  if (k < 1) throw InvalidArity("small formula needs k >= 1");
  return exists_block(witness_variables(k), sigma_of(sigma, set_of_predicate(k)));
}

// exists x1..xk sigma[SYM-DIFF[Sx, SET[k]]], exactly as printed: the delta is
// never empty and E itself may be.
inline Formula repair_formula(Semantics sigma, int k) {
  require_first_order(sigma);
  if (k < 1) throw InvalidArity("repair formula needs k >= 1");
  return exists_block(witness_variables(k),
                sigma_of(sigma, sym_diff_of(relation_predicate("S"), set_of_predicate(k))));
}

// One disjunct of the corrected repair formula: delta of at most l elements
// (none for l = 0) and a nonempty result.
inline Formula corrected_repair_disjunct(Semantics sigma, int l) {
  require_first_order(sigma);
  if (l < 0) throw InvalidArity("repair formula needs k >= 0");
  Predicate result = l == 0 ? relation_predicate("S")
                            : sym_diff_of(relation_predicate("S"), set_of_predicate(l));
  const std::string y = fresh_variable("y");
  return exists_block(witness_variables(l), conjunction(sigma_of(sigma, result), exists(y, result(y))));
}

inline Formula corrected_repair_formula(Semantics sigma, int k) {
  require_first_order(sigma);
  if (k < 0) throw InvalidArity("repair formula needs k >= 0");
  std::vector<Formula> parts;
  for (int l = 0; l <= k; ++l) parts.push_back(corrected_repair_disjunct(sigma, l));
  return disjunction(std::move(parts));
}

// exists t x1..x(k-1) (Tt and sigma[SYM-DIFF[E0x, SET[k](t, x1..)]]).
// With `nonempty` the result set must also be nonempty.
inline Formula adjust_formula(Semantics sigma, int k, bool nonempty = false) {
  require_first_order(sigma);
  if (k < 1) throw InvalidArity("adjust formula needs k >= 1");
  std::vector<std::string> block{"t"};
  for (const auto& x : witness_variables(k - 1)) block.push_back(x);
  Predicate result = sym_diff_of(relation_predicate("E0"), set_predicate(block));
  std::vector<Formula> parts{unary("T", "t"), sigma_of(sigma, result)};
  if (nonempty) {
    const std::string y = fresh_variable("y");
    parts.push_back(exists(y, result(y)));
  }
  return exists_block(block, conjunction(std::move(parts)));
}

// exists x1..x(k-1) (sigma[D] and ATMOST[SYM-DIFF[D, E2x], k-1]) where
// D = SYM-DIFF[E1x, SET[k-1]]; k is the distance between E1 and E2.
inline Formula center_formula(Semantics sigma, int k, bool nonempty = false) {
  require_first_order(sigma);
  if (k < 2) throw InvalidArity("center formula needs k >= 2");
  Predicate result = sym_diff_of(relation_predicate("E1"), set_of_predicate(k - 1));
  std::vector<Formula> parts{sigma_of(sigma, result),
                             at_most(sym_diff_of(result, relation_predicate("E2")), k - 1)};
  if (nonempty) {
    const std::string y = fresh_variable("y");
    parts.push_back(exists(y, result(y)));
  }
  return exists_block(witness_variables(k - 1), conjunction(std::move(parts)));
}

}  // namespace argudyn::fo
