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
#include <bit>
#include <cassert>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace argudyn {

using ArgumentIndex = std::size_t;

// A subset of the arguments {0, ..., universe-1} of one framework, stored as
// a packed bitset. All binary operations require equal universes.
class ArgumentSet {
 public:
  ArgumentSet() = default;
  explicit ArgumentSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ArgumentSet(std::size_t universe, std::initializer_list<ArgumentIndex> members)
      : ArgumentSet(universe) {
    for (auto m : members) insert(m);
  }

  static ArgumentSet full(std::size_t universe) {
    ArgumentSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  template <typename Range>
  static ArgumentSet of(std::size_t universe, const Range& members) {
    ArgumentSet s(universe);
    for (auto m : members) s.insert(static_cast<ArgumentIndex>(m));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ArgumentIndex i) const noexcept {
    assert(i < universe_);
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void insert(ArgumentIndex i) noexcept {
    assert(i < universe_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void erase(ArgumentIndex i) noexcept {
    assert(i < universe_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  void flip(ArgumentIndex i) noexcept {
    assert(i < universe_);
    words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
  }
  void set(ArgumentIndex i, bool value) noexcept {
    if (value)
      insert(i);
    else
      erase(i);
  }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(),
                       [](std::uint64_t w) { return w == 0; });
  }

  bool intersects(const ArgumentSet& o) const noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool subset_of(const ArgumentSet& o) const noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool strict_subset_of(const ArgumentSet& o) const noexcept {
    return subset_of(o) && *this != o;
  }

  ArgumentSet& operator|=(const ArgumentSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ArgumentSet& operator&=(const ArgumentSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // Symmetric difference.
  ArgumentSet& operator^=(const ArgumentSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  ArgumentSet& operator-=(const ArgumentSet& o) noexcept {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  ArgumentSet complement() const {
    ArgumentSet r(universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
    r.trim();
    return r;
  }

  friend ArgumentSet operator|(ArgumentSet a, const ArgumentSet& b) { return a |= b; }
  friend ArgumentSet operator&(ArgumentSet a, const ArgumentSet& b) { return a &= b; }
  friend ArgumentSet operator^(ArgumentSet a, const ArgumentSet& b) { return a ^= b; }
  friend ArgumentSet operator-(ArgumentSet a, const ArgumentSet& b) { return a -= b; }
  friend bool operator==(const ArgumentSet&, const ArgumentSet&) = default;

  // Calls f(i) for every member in increasing index order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<ArgumentIndex> members() const {
    std::vector<ArgumentIndex> out;
    out.reserve(size());
    for_each([&](ArgumentIndex i) { out.push_back(i); });
    return out;
  }

  // Smallest member, or universe() when empty.
  ArgumentIndex first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w])
        return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return universe_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL + std::hash<std::uint64_t>{}(w);
    return h;
  }

 private:
  void trim() noexcept {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

// |a Δ b|.
inline std::size_t distance(const ArgumentSet& a, const ArgumentSet& b) {
  return (a ^ b).size();
}

// Lexicographic comparison of the sorted member sequences.
inline std::strong_ordering lexicographic_compare(const ArgumentSet& a,
                                                  const ArgumentSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare_three_way(ma.begin(), ma.end(),
                                                mb.begin(), mb.end());
}

// Canonical order used for every enumeration and tie-break: cardinality
// first, then lexicographic by argument order.
inline bool canonical_less(const ArgumentSet& a, const ArgumentSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lexicographic_compare(a, b) < 0;
}

struct ArgumentSetHash {
  std::size_t operator()(const ArgumentSet& s) const noexcept { return s.hash(); }
};

}  // namespace argudyn
