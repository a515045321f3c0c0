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
#include <string>
#include <vector>

#include "argudyn/argument_set.hpp"
#include "argudyn/clause_search.hpp"
#include "argudyn/errors.hpp"
#include "argudyn/framework.hpp"
#include "argudyn/semantics.hpp"

namespace argudyn {

inline constexpr std::size_t kDefaultEnumerationCap = 20;

// Cap on the number of arguments for exhaustive enumeration. The environment
// variable ARGUDYN_ENUM_CAP overrides the default.
inline std::size_t default_enumeration_cap() {
  if (const char* env = std::getenv("ARGUDYN_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return static_cast<std::size_t>(v);
  }
  return kDefaultEnumerationCap;
}

struct ExtensionList {
  Semantics semantics;
  std::vector<ArgumentSet> extensions;  // canonical order, no duplicates

  std::size_t size() const noexcept { return extensions.size(); }
  bool empty() const noexcept { return extensions.empty(); }
  bool contains(const ArgumentSet& s) const {
    return std::find(extensions.begin(), extensions.end(), s) != extensions.end();
  }
};

namespace detail {

inline void check_cap(const ArgumentationFramework& f, std::size_t cap) {
  if (f.size() > cap) throw CapExceeded(f.size(), cap);
}

// Depth-first walk over conflict-free subsets; collects the admissible ones.
inline void collect_admissible(const ArgumentationFramework& f, ArgumentIndex next,
                               ArgumentSet& current, ArgumentSet& blocked,
                               std::vector<ArgumentSet>& out) {
  if (next == f.size()) {
    if (is_admissible(f, current)) out.push_back(current);
    return;
  }
  collect_admissible(f, next + 1, current, blocked, out);
  if (f.self_attacking(next) || blocked.contains(next)) return;
  // Arguments in conflict with `next` become unavailable further down.
  ArgumentSet saved = blocked;
  current.insert(next);
  blocked |= f.attacked_by(next);
  blocked |= f.attackers_of(next);
  collect_admissible(f, next + 1, current, blocked, out);
  current.erase(next);
  blocked = std::move(saved);
}

inline std::vector<ArgumentSet> admissible_sets(const ArgumentationFramework& f) {
  std::vector<ArgumentSet> out;
  ArgumentSet current(f.size());
  ArgumentSet blocked(f.size());
  collect_admissible(f, 0, current, blocked, out);
  return out;
}

inline std::vector<ArgumentSet> subset_maximal(std::vector<ArgumentSet> adm) {
  std::sort(adm.begin(), adm.end(), [](const ArgumentSet& a, const ArgumentSet& b) {
    return a.size() > b.size();
  });
  std::vector<ArgumentSet> maximal;
  for (const auto& s : adm) {
    const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                       [&](const ArgumentSet& m) { return s.subset_of(m); });
    if (!dominated) maximal.push_back(s);
  }
  return maximal;
}

inline std::vector<ArgumentSet> range_maximal(const ArgumentationFramework& f,
                                              const std::vector<ArgumentSet>& adm) {
  std::vector<std::pair<ArgumentSet, ArgumentSet>> with_range;
  with_range.reserve(adm.size());
  for (const auto& s : adm) with_range.emplace_back(range(f, s), s);
  std::stable_sort(with_range.begin(), with_range.end(), [](const auto& a, const auto& b) {
    return a.first.size() > b.first.size();
  });
  std::vector<ArgumentSet> maximal_ranges;
  std::vector<ArgumentSet> out;
  for (const auto& [r, s] : with_range) {
    const bool dominated =
        std::any_of(maximal_ranges.begin(), maximal_ranges.end(),
                    [&](const ArgumentSet& m) { return r.strict_subset_of(m); });
    if (dominated) continue;
    if (std::find(maximal_ranges.begin(), maximal_ranges.end(), r) == maximal_ranges.end())
      maximal_ranges.push_back(r);
    out.push_back(s);
  }
  return out;
}

}  // namespace detail

// Exhaustive enumeration of sigma(F) in canonical order.
inline ExtensionList enumerate(const ArgumentationFramework& f, Semantics sigma,
                               std::size_t cap = default_enumeration_cap()) {
  detail::check_cap(f, cap);
  auto adm = detail::admissible_sets(f);
  std::vector<ArgumentSet> result;
  switch (sigma) {
    case Semantics::adm:
      result = std::move(adm);
      break;
    case Semantics::com:
      for (auto& s : adm)
        if (defended_by(f, s).subset_of(s)) result.push_back(std::move(s));
      break;
    case Semantics::stb:
      for (auto& s : adm)
        if (range(f, s).size() == f.size()) result.push_back(std::move(s));
      break;
    case Semantics::prf:
      result = detail::subset_maximal(std::move(adm));
      break;
    case Semantics::sem:
      result = detail::range_maximal(f, adm);
      break;
  }
  std::sort(result.begin(), result.end(), canonical_less);
  return ExtensionList{sigma, std::move(result)};
}

// Clause encoding of "T is admissible" with one variable per argument.
inline ClauseSearch admissibility_encoding(const ArgumentationFramework& f) {
  ClauseSearch cs(f.size());
  for (const auto& [a, b] : f.attacks()) {
    if (a == b)
      cs.add_unit(neg(a));
    else
      cs.add_clause({neg(a), neg(b)});
  }
  for (ArgumentIndex a = 0; a < f.size(); ++a) {
    for (ArgumentIndex b : f.attacker_list(a)) {
      std::vector<Literal> clause{neg(a)};
      for (ArgumentIndex c : f.attacker_list(b)) clause.push_back(pos(c));
      cs.add_clause(std::move(clause));
    }
  }
  return cs;
}

inline ArgumentSet model_to_set(const std::vector<bool>& model) {
  ArgumentSet s(model.size());
  for (std::size_t i = 0; i < model.size(); ++i)
    if (model[i]) s.insert(i);
  return s;
}

// An admissible strict superset of S, if one exists.
inline std::optional<ArgumentSet> admissible_strict_superset(const ArgumentationFramework& f,
                                                             const ArgumentSet& s) {
  auto cs = admissibility_encoding(f);
  s.for_each([&](ArgumentIndex x) { cs.add_unit(pos(x)); });
  std::vector<Literal> grow;
  for (ArgumentIndex x = 0; x < f.size(); ++x)
    if (!s.contains(x)) grow.push_back(pos(x));
  cs.add_clause(std::move(grow));
  auto model = cs.solve();
  if (!model) return std::nullopt;
  return model_to_set(*model);
}

// An admissible T whose range strictly contains the range of S, if any.
inline std::optional<ArgumentSet> admissible_with_larger_range(const ArgumentationFramework& f,
                                                               const ArgumentSet& s) {
  auto cs = admissibility_encoding(f);
  const ArgumentSet r = range(f, s);
  std::vector<Literal> grow;
  ArgumentSet grow_vars(f.size());
  for (ArgumentIndex y = 0; y < f.size(); ++y) {
    // y in T or some attacker of y in T
    std::vector<Literal> covers{pos(y)};
    for (ArgumentIndex c : f.attacker_list(y)) covers.push_back(pos(c));
    if (r.contains(y)) {
      cs.add_clause(std::move(covers));
    } else {
      for (Literal l : covers) {
        const auto v = static_cast<std::size_t>(l - 1);
        if (!grow_vars.contains(v)) {
          grow_vars.insert(v);
          grow.push_back(l);
        }
      }
    }
  }
  cs.add_clause(std::move(grow));
  auto model = cs.solve();
  if (!model) return std::nullopt;
  return model_to_set(*model);
}

// Membership in prf(F): admissible with no admissible strict superset.
// Decided by clause search, so it does not depend on the enumeration cap.
inline bool is_preferred(const ArgumentationFramework& f, const ArgumentSet& s) {
  return is_admissible(f, s) && !admissible_strict_superset(f, s);
}

// Membership in sem(F): admissible with no admissible T where S+ ⊊ T+.
inline bool is_semistable(const ArgumentationFramework& f, const ArgumentSet& s) {
  return is_admissible(f, s) && !admissible_with_larger_range(f, s);
}

// Enumeration-based variants of the two checks above, kept as an independent
// route for cross-checking.
inline bool is_preferred_exhaustive(const ArgumentationFramework& f, const ArgumentSet& s,
                                    std::size_t cap = default_enumeration_cap()) {
  detail::check_cap(f, cap);
  if (!is_admissible(f, s)) return false;
  for (const auto& t : detail::admissible_sets(f))
    if (s.strict_subset_of(t)) return false;
  return true;
}

inline bool is_semistable_exhaustive(const ArgumentationFramework& f, const ArgumentSet& s,
                                     std::size_t cap = default_enumeration_cap()) {
  detail::check_cap(f, cap);
  if (!is_admissible(f, s)) return false;
  const ArgumentSet r = range(f, s);
  for (const auto& t : detail::admissible_sets(f))
    if (r.strict_subset_of(range(f, t))) return false;
  return true;
}

inline bool is_extension(const ArgumentationFramework& f, const ArgumentSet& s, Semantics sigma) {
  switch (sigma) {
    case Semantics::adm: return is_admissible(f, s);
    case Semantics::com: return is_complete(f, s);
    case Semantics::stb: return is_stable(f, s);
    case Semantics::prf: return is_preferred(f, s);
    case Semantics::sem: return is_semistable(f, s);
  }
  return false;
}

// Necessary condition for membership that is cheap for every semantics.
inline bool passes_local_check(const ArgumentationFramework& f, const ArgumentSet& s,
                               Semantics sigma) {
  switch (sigma) {
    case Semantics::adm: return is_admissible(f, s);
    case Semantics::com: return is_complete(f, s);
    case Semantics::stb: return is_stable(f, s);
    case Semantics::prf:
    case Semantics::sem:
      return is_complete(f, s);
  }
  return false;
}

}  // namespace argudyn
