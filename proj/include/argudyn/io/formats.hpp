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
#include <fstream>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argudyn/errors.hpp"
#include "argudyn/framework.hpp"
#include "argudyn/gadgets/cnf.hpp"

namespace argudyn::io {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw IoError("cannot write '" + path + "'");
}

inline std::string trimmed(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

// APX: `arg(NAME).` and `att(NAME,NAME).` facts, any number per line, with
// `%` comments. Attacks may name arguments declared further down.
inline ArgumentationFramework parse_apx(std::string_view text) {
  struct Fact {
    std::size_t line;
    std::string kind, first, second;
  };
  static const std::regex statement(
      R"(^\s*(arg|att)\s*\(\s*([A-Za-z0-9_]+)\s*(?:,\s*([A-Za-z0-9_]+)\s*)?\)\s*$)");

  std::vector<Fact> facts;
  std::string pending;
  std::size_t line = 1;
  std::size_t start_line = 1;
  bool comment = false;
  for (char c : text) {
    if (c == '\n') {
      ++line;
      comment = false;
      pending += ' ';
      continue;
    }
    if (comment) continue;
    if (c == '%') {
      comment = true;
      continue;
    }
    if (trimmed(pending).empty()) start_line = line;
    if (c != '.') {
      pending += c;
      continue;
    }
    std::smatch m;
    if (!std::regex_match(pending, m, statement))
      throw SyntaxError(start_line, "malformed statement '" + trimmed(pending) + ".'");
    const bool is_arg = m[1] == "arg";
    if (is_arg == m[3].matched)
      throw SyntaxError(start_line, is_arg ? "arg takes one name" : "att takes two names");
    facts.push_back({start_line, m[1], m[2], m[3].matched ? m[3].str() : ""});
    pending.clear();
  }
  if (!trimmed(pending).empty())
    throw SyntaxError(start_line, "statement not terminated by '.'");

  ArgumentationFramework::Builder b;
  for (const auto& f : facts)
    if (f.kind == "arg") {
      if (b.has_argument(f.first)) throw DuplicateArgument(f.line, f.first);
      b.add_argument(f.first);
    }
  std::set<std::pair<ArgumentIndex, ArgumentIndex>> seen;
  for (const auto& f : facts)
    if (f.kind == "att") {
      for (const auto& n : {f.first, f.second})
        if (!b.has_argument(n)) throw UndeclaredArgument(f.line, n);
      const auto pair = std::make_pair(b.index_of(f.first), b.index_of(f.second));
      if (seen.insert(pair).second) b.add_attack(pair.first, pair.second);
    }
  return b.build();
}

inline std::string write_apx(const ArgumentationFramework& f) {
  std::string out;
  for (const auto& n : f.names()) out += "arg(" + n + ").\n";
  for (const auto& [a, b] : f.attacks()) out += "att(" + f.name(a) + "," + f.name(b) + ").\n";
  return out;
}

namespace detail {

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace detail

// TGF: one argument per line (first token; a label may follow), a `#` line,
// then one `FROM TO` attack per line.
inline ArgumentationFramework parse_tgf(std::string_view text) {
  ArgumentationFramework::Builder b;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  bool edges = false;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> attacks;
  {
    std::istringstream scan{std::string(text)};
    bool separated = false;
    while (!separated && std::getline(scan, raw)) {
      ++line;
      const auto words = detail::split_words(raw);
      separated = !words.empty() && words[0] == "#";
    }
    if (!separated) throw SyntaxError(line, "missing '#' separator");
    line = 0;
  }
  while (std::getline(in, raw)) {
    ++line;
    const auto words = detail::split_words(raw);
    if (words.empty()) continue;
    if (words[0] == "#") {
      if (edges) throw SyntaxError(line, "second '#' separator");
      edges = true;
      continue;
    }
    if (!edges) {
      if (!is_valid_argument_name(words[0]))
        throw SyntaxError(line, "invalid argument name '" + words[0] + "'");
      if (b.has_argument(words[0])) throw DuplicateArgument(line, words[0]);
      b.add_argument(words[0]);
    } else {
      if (words.size() < 2) throw SyntaxError(line, "attack line needs two arguments");
      attacks.push_back({line, {words[0], words[1]}});
    }
  }
  std::set<std::pair<ArgumentIndex, ArgumentIndex>> seen;
  for (const auto& [l, att] : attacks) {
    for (const auto& n : {att.first, att.second})
      if (!b.has_argument(n)) throw UndeclaredArgument(l, n);
    const auto pair = std::make_pair(b.index_of(att.first), b.index_of(att.second));
    if (seen.insert(pair).second) b.add_attack(pair.first, pair.second);
  }
  return b.build();
}

inline std::string write_tgf(const ArgumentationFramework& f) {
  std::string out;
  for (const auto& n : f.names()) out += n + "\n";
  out += "#\n";
  for (const auto& [a, b] : f.attacks()) out += f.name(a) + " " + f.name(b) + "\n";
  return out;
}

// Chooses the parser by extension: .tgf is TGF, anything else APX.
inline ArgumentationFramework parse_framework_file(const std::string& path) {
  const std::string text = read_file(path);
  if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".tgf") == 0) return parse_tgf(text);
  return parse_apx(text);
}

// DIMACS CNF: `c` comments, a `p cnf N M` header, clauses ended by 0.
inline gadgets::ThreeCnfTwoFormula parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  long variables = -1;
  long expected = -1;
  std::vector<gadgets::ThreeCnfTwoFormula::Clause> clauses;
  gadgets::ThreeCnfTwoFormula::Clause current;
  while (std::getline(in, raw)) {
    ++line;
    const auto words = detail::split_words(raw);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "%") break;
    if (words[0] == "p") {
      if (variables >= 0) throw SyntaxError(line, "second problem line");
      if (words.size() != 4 || words[1] != "cnf")
        throw SyntaxError(line, "expected 'p cnf VARIABLES CLAUSES'");
      try {
        variables = std::stol(words[2]);
        expected = std::stol(words[3]);
      } catch (const std::exception&) {
        throw SyntaxError(line, "non-numeric problem line");
      }
      if (variables < 0 || expected < 0) throw SyntaxError(line, "negative count in problem line");
      continue;
    }
    if (variables < 0) throw SyntaxError(line, "clause before problem line");
    for (const auto& w : words) {
      long lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stol(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w.size()) throw SyntaxError(line, "invalid literal '" + w + "'");
      if (lit == 0) {
        clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (lit > variables || -lit > variables)
          throw SyntaxError(line, "literal " + w + " exceeds variable count");
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (variables < 0) throw SyntaxError(line, "missing problem line");
  if (!current.empty()) throw SyntaxError(line, "last clause not terminated by 0");
  if (static_cast<long>(clauses.size()) != expected)
    throw SyntaxError(line, "header announces " + std::to_string(expected) + " clauses, found " +
                                std::to_string(clauses.size()));
  return gadgets::ThreeCnfTwoFormula(static_cast<int>(variables), std::move(clauses));
}

// "a,c" -> {a, c}; the empty string is the empty set.
inline ArgumentSet parse_set_list(const ArgumentationFramework& f, const std::string& list) {
  ArgumentSet s = f.empty_set();
  std::size_t pos = 0;
  while (pos <= list.size() && !list.empty()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    std::string name = list.substr(pos, comma - pos);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    if (!name.empty()) {
      const auto idx = f.find(name);
      if (!idx) throw InvalidInstance("unknown argument '" + name + "'");
      s.insert(*idx);
    }
    pos = comma + 1;
  }
  return s;
}

inline std::string join_names(const ArgumentationFramework& f, const ArgumentSet& s) {
  std::string out;
  for (const auto& n : f.names_of(s)) out += (out.empty() ? "" : ",") + n;
  return out;
}

}  // namespace argudyn::io
