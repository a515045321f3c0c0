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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

#include "argudyn/argument_set.hpp"
#include "argudyn/errors.hpp"
#include "argudyn/framework.hpp"

namespace argudyn {

enum class Semantics { adm, com, prf, sem, stb };

inline constexpr std::array<Semantics, 5> kAllSemantics = {
    Semantics::adm, Semantics::com, Semantics::prf, Semantics::sem, Semantics::stb};

inline constexpr std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::adm: return "adm";
    case Semantics::com: return "com";
    case Semantics::prf: return "prf";
    case Semantics::sem: return "sem";
    case Semantics::stb: return "stb";
  }
  return "?";
}

inline Semantics parse_semantics(std::string_view text) {
  for (auto s : kAllSemantics)
    if (to_string(s) == text) return s;
  throw UnsupportedSemantics("unknown semantics '" + std::string(text) + "'");
}

// Semantics whose membership test is polynomial (no maximality condition).
inline constexpr bool is_local(Semantics s) {
  return s == Semantics::adm || s == Semantics::com || s == Semantics::stb;
}

// S together with every argument attacked by a member of S.
inline ArgumentSet range(const ArgumentationFramework& f, const ArgumentSet& s) {
  ArgumentSet r = s;
  s.for_each([&](ArgumentIndex x) { r |= f.attacked_by(x); });
  return r;
}

// Arguments attacked by some member of S (S's range without S itself).
inline ArgumentSet attacked_by_set(const ArgumentationFramework& f, const ArgumentSet& s) {
  ArgumentSet r(f.size());
  s.for_each([&](ArgumentIndex x) { r |= f.attacked_by(x); });
  return r;
}

inline bool is_conflict_free(const ArgumentationFramework& f, const ArgumentSet& s) {
  bool ok = true;
  s.for_each([&](ArgumentIndex x) {
    if (ok && f.attacked_by(x).intersects(s)) ok = false;
  });
  return ok;
}

// Every attacker of x is attacked by some member of S.
inline bool defends(const ArgumentationFramework& f, const ArgumentSet& s, ArgumentIndex x) {
  const ArgumentSet hit = attacked_by_set(f, s);
  return f.attackers_of(x).subset_of(hit);
}

// All arguments defended by S (the characteristic function of S).
inline ArgumentSet defended_by(const ArgumentationFramework& f, const ArgumentSet& s) {
  const ArgumentSet hit = attacked_by_set(f, s);
  ArgumentSet out(f.size());
  for (ArgumentIndex x = 0; x < f.size(); ++x)
    if (f.attackers_of(x).subset_of(hit)) out.insert(x);
  return out;
}

inline bool is_admissible(const ArgumentationFramework& f, const ArgumentSet& s) {
  if (!is_conflict_free(f, s)) return false;
  const ArgumentSet hit = attacked_by_set(f, s);
  bool ok = true;
  s.for_each([&](ArgumentIndex x) {
    if (ok && !f.attackers_of(x).subset_of(hit)) ok = false;
  });
  return ok;
}

inline bool is_complete(const ArgumentationFramework& f, const ArgumentSet& s) {
  return is_admissible(f, s) && defended_by(f, s).subset_of(s);
}

// Conflict-free with full range.
inline bool is_stable(const ArgumentationFramework& f, const ArgumentSet& s) {
  return is_conflict_free(f, s) && range(f, s).size() == f.size();
}

// Number of distinct other arguments adjacent to x in either direction.
inline std::size_t degree(const ArgumentationFramework& f, ArgumentIndex x) {
  ArgumentSet nb = f.attacked_by(x) | f.attackers_of(x);
  nb.erase(x);
  return nb.size();
}

inline std::size_t max_degree(const ArgumentationFramework& f) {
  std::size_t best = 0;
  for (ArgumentIndex x = 0; x < f.size(); ++x) best = std::max(best, degree(f, x));
  return best;
}

}  // namespace argudyn
