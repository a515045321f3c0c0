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
#include <optional>
#include <string>
#include <string_view>

#include "argudyn/argument_set.hpp"
#include "argudyn/enumerate.hpp"
#include "argudyn/errors.hpp"
#include "argudyn/framework.hpp"
#include "argudyn/semantics.hpp"

namespace argudyn {

enum class ProblemKind { small, repair, adjust, center };

inline constexpr std::string_view to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::small: return "small";
    case ProblemKind::repair: return "repair";
    case ProblemKind::adjust: return "adjust";
    case ProblemKind::center: return "center";
  }
  return "?";
}

inline ProblemKind parse_problem_kind(std::string_view text) {
  for (auto k : {ProblemKind::small, ProblemKind::repair, ProblemKind::adjust, ProblemKind::center})
    if (to_string(k) == text) return k;
  throw InvalidInstance("unknown problem '" + std::string(text) + "'");
}

// One instance of Small / Repair / Adjust / Center. Small and Repair always
// ask for a nonempty extension. Adjust and Center accept the empty set unless
// require_nonempty is set.
class ProblemInstance {
 public:
  static ProblemInstance small(ArgumentationFramework f, Semantics sigma, int k) {
    check_k(k);
    ProblemInstance p(ProblemKind::small, std::move(f), sigma);
    p.k_ = k;
    p.require_nonempty_ = true;
    return p;
  }

  static ProblemInstance repair(ArgumentationFramework f, ArgumentSet s, Semantics sigma, int k) {
    check_k(k);
    check_universe(f, s);
    ProblemInstance p(ProblemKind::repair, std::move(f), sigma);
    p.k_ = k;
    p.base_ = std::move(s);
    p.require_nonempty_ = true;
    return p;
  }

  static ProblemInstance adjust(ArgumentationFramework f, ArgumentSet e0, ArgumentIndex target,
                                Semantics sigma, int k, bool require_nonempty = false) {
    check_k(k);
    check_universe(f, e0);
    if (target >= f.size()) throw InvalidInstance("target argument out of range");
    if (!is_extension(f, e0, sigma))
      throw NotAnExtension("E0 is not a " + std::string(to_string(sigma)) + " extension");
    ProblemInstance p(ProblemKind::adjust, std::move(f), sigma);
    p.k_ = k;
    p.base_ = std::move(e0);
    p.target_ = target;
    p.require_nonempty_ = require_nonempty;
    return p;
  }

  static ProblemInstance center(ArgumentationFramework f, ArgumentSet e1, ArgumentSet e2,
                                Semantics sigma, bool require_nonempty = false) {
    check_universe(f, e1);
    check_universe(f, e2);
    if (!is_extension(f, e1, sigma))
      throw NotAnExtension("E1 is not a " + std::string(to_string(sigma)) + " extension");
    if (!is_extension(f, e2, sigma))
      throw NotAnExtension("E2 is not a " + std::string(to_string(sigma)) + " extension");
    ProblemInstance p(ProblemKind::center, std::move(f), sigma);
    p.k_ = static_cast<int>(distance(e1, e2));
    p.base_ = std::move(e1);
    p.other_ = std::move(e2);
    p.require_nonempty_ = require_nonempty;
    return p;
  }

  ProblemKind kind() const noexcept { return kind_; }
  const ArgumentationFramework& framework() const noexcept { return framework_; }
  Semantics semantics() const noexcept { return semantics_; }
  // k for Small/Repair/Adjust; dist(E1, E2) for Center.
  int parameter() const noexcept { return k_; }
  bool require_nonempty() const noexcept { return require_nonempty_; }

  // S (Repair), E0 (Adjust), E1 (Center); empty for Small.
  const ArgumentSet& base() const noexcept { return base_; }
  const ArgumentSet& repair_set() const noexcept { return base_; }
  const ArgumentSet& e0() const noexcept { return base_; }
  const ArgumentSet& e1() const noexcept { return base_; }
  const ArgumentSet& e2() const noexcept { return other_; }
  ArgumentIndex target() const noexcept { return target_; }

  ProblemInstance with_semantics(Semantics sigma) const {
    switch (kind_) {
      case ProblemKind::small: return small(framework_, sigma, k_);
      case ProblemKind::repair: return repair(framework_, base_, sigma, k_);
      case ProblemKind::adjust:
        return adjust(framework_, base_, target_, sigma, k_, require_nonempty_);
      case ProblemKind::center: return center(framework_, base_, other_, sigma, require_nonempty_);
    }
    return *this;
  }

 private:
  ProblemInstance(ProblemKind kind, ArgumentationFramework f, Semantics sigma)
      : kind_(kind),
        framework_(std::move(f)),
        semantics_(sigma),
        base_(framework_.size()),
        other_(framework_.size()) {}

  static void check_k(int k) {
    if (k < 0) throw InvalidInstance("k must be non-negative");
  }
  static void check_universe(const ArgumentationFramework& f, const ArgumentSet& s) {
    if (s.universe() != f.size()) throw InvalidInstance("set is not over the framework");
  }

  ProblemKind kind_;
  ArgumentationFramework framework_;
  Semantics semantics_;
  int k_ = 0;
  bool require_nonempty_ = false;
  ArgumentSet base_;
  ArgumentSet other_;
  ArgumentIndex target_ = 0;
};

struct SolveStats {
  std::size_t nodes = 0;       // search nodes (branching) or assignments (fo)
  std::size_t candidates = 0;  // candidate sets examined
  double wall_seconds = 0.0;
};

struct SolveResult {
  bool answer = false;
  std::optional<ArgumentSet> witness;  // present iff answer
  SolveStats stats;
};

// Checks E against the defining conditions of the instance.
inline bool verifies(const ProblemInstance& p, const ArgumentSet& e) {
  const auto& f = p.framework();
  if (e.universe() != f.size()) return false;
  if (p.require_nonempty() && e.empty()) return false;
  const auto k = static_cast<std::size_t>(p.parameter());
  bool conditions = false;
  switch (p.kind()) {
    case ProblemKind::small:
      conditions = e.size() <= k;
      break;
    case ProblemKind::repair:
      conditions = distance(e, p.repair_set()) <= k;
      break;
    case ProblemKind::adjust:
      conditions = distance(e, p.e0()) <= k && (e ^ p.e0()).contains(p.target());
      break;
    case ProblemKind::center:
      conditions = distance(e, p.e1()) < k && distance(e, p.e2()) < k;
      break;
  }
  return conditions && is_extension(f, e, p.semantics());
}

}  // namespace argudyn
