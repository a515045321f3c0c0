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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "argudyn/argument_set.hpp"
#include "argudyn/errors.hpp"

namespace argudyn {

using Attack = std::pair<ArgumentIndex, ArgumentIndex>;

inline bool is_valid_argument_name(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

// A finite argumentation framework (X, A). Arguments are indexed in
// insertion order; that order is used for iteration, enumeration and every
// tie-break. Self-attacks are allowed. Immutable once built.
class ArgumentationFramework {
 public:
  class Builder;

  ArgumentationFramework() = default;

  ArgumentationFramework(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& attacks);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::string& name(ArgumentIndex i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::optional<ArgumentIndex> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  ArgumentIndex index_of(std::string_view name) const {
    auto i = find(name);
    if (!i) throw InvalidFramework("unknown argument '" + std::string(name) + "'");
    return *i;
  }

  // Attacks in canonical order (attacker index, then target index).
  const std::vector<Attack>& attacks() const noexcept { return attacks_; }
  std::size_t attack_count() const noexcept { return attacks_.size(); }

  bool attacks(ArgumentIndex from, ArgumentIndex to) const {
    return out_[from].contains(to);
  }
  // Arguments attacked by x.
  const ArgumentSet& attacked_by(ArgumentIndex x) const { return out_[x]; }
  // Arguments attacking x.
  const ArgumentSet& attackers_of(ArgumentIndex x) const { return in_[x]; }
  const std::vector<ArgumentIndex>& attacker_list(ArgumentIndex x) const {
    return in_list_[x];
  }
  const std::vector<ArgumentIndex>& target_list(ArgumentIndex x) const {
    return out_list_[x];
  }
  bool self_attacking(ArgumentIndex x) const { return out_[x].contains(x); }

  ArgumentSet empty_set() const { return ArgumentSet(size()); }
  ArgumentSet all() const { return ArgumentSet::full(size()); }

  // Builds a set from argument names; throws on unknown names.
  template <typename Names>
  ArgumentSet set_of(const Names& names) const {
    ArgumentSet s(size());
    for (const auto& n : names) s.insert(index_of(n));
    return s;
  }
  ArgumentSet set_of(std::initializer_list<std::string_view> names) const {
    ArgumentSet s(size());
    for (auto n : names) s.insert(index_of(n));
    return s;
  }

  std::vector<std::string> names_of(const ArgumentSet& s) const {
    std::vector<std::string> out;
    s.for_each([&](ArgumentIndex i) { out.push_back(names_[i]); });
    return out;
  }

  friend bool operator==(const ArgumentationFramework& a,
                         const ArgumentationFramework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  void build_adjacency();

  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgumentIndex> index_;
  std::vector<Attack> attacks_;
  std::vector<ArgumentSet> out_;
  std::vector<ArgumentSet> in_;
  std::vector<std::vector<ArgumentIndex>> out_list_;
  std::vector<std::vector<ArgumentIndex>> in_list_;

  friend class Builder;
};

// Incremental construction. Duplicate arguments and attacks on undeclared
// arguments are rejected; a repeated attack pair is rejected as well.
class ArgumentationFramework::Builder {
 public:
  ArgumentIndex add_argument(std::string name) {
    if (!is_valid_argument_name(name))
      throw InvalidFramework("invalid argument name '" + name + "'");
    if (index_.count(name))
      throw InvalidFramework("duplicate argument '" + name + "'");
    const ArgumentIndex i = names_.size();
    index_.emplace(name, i);
    names_.push_back(std::move(name));
    return i;
  }

  bool has_argument(std::string_view name) const {
    return index_.count(std::string(name)) != 0;
  }
  ArgumentIndex index_of(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end())
      throw InvalidFramework("attack on undeclared argument '" + std::string(name) + "'");
    return it->second;
  }
  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(ArgumentIndex i) const { return names_.at(i); }

  void add_attack(std::string_view from, std::string_view to) {
    add_attack(index_of(from), index_of(to));
  }
  void add_attack(ArgumentIndex from, ArgumentIndex to) {
    if (from >= names_.size() || to >= names_.size())
      throw InvalidFramework("attack endpoint out of range");
    attacks_.emplace_back(from, to);
  }
  // Adds the attack unless it is already present.
  void ensure_attack(ArgumentIndex from, ArgumentIndex to) {
    if (std::find(attacks_.begin(), attacks_.end(), Attack{from, to}) == attacks_.end())
      add_attack(from, to);
  }

  ArgumentationFramework build() const {
    ArgumentationFramework f;
    f.names_ = names_;
    f.index_ = index_;
    f.attacks_ = attacks_;
    std::sort(f.attacks_.begin(), f.attacks_.end());
    if (std::adjacent_find(f.attacks_.begin(), f.attacks_.end()) != f.attacks_.end())
      throw InvalidFramework("duplicate attack");
    f.build_adjacency();
    return f;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, ArgumentIndex> index_;
  std::vector<Attack> attacks_;
};

inline ArgumentationFramework::ArgumentationFramework(
    std::vector<std::string> names,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
  Builder b;
  for (auto& n : names) b.add_argument(std::move(n));
  for (const auto& [from, to] : attacks) b.add_attack(from, to);
  *this = b.build();
}

inline void ArgumentationFramework::build_adjacency() {
  const std::size_t n = names_.size();
  out_.assign(n, ArgumentSet(n));
  in_.assign(n, ArgumentSet(n));
  out_list_.assign(n, {});
  in_list_.assign(n, {});
  for (const auto& [from, to] : attacks_) {
    out_[from].insert(to);
    in_[to].insert(from);
    out_list_[from].push_back(to);
    in_list_[to].push_back(from);
  }
  for (auto& l : in_list_) std::sort(l.begin(), l.end());
}

}  // namespace argudyn
