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
#include <stdexcept>
#include <string>

namespace argudyn {

// Base of every error raised by the library. The CLI maps all of them to
// exit code 2 with a single-line diagnostic built from what().
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CapExceeded : public Error {
 public:
  CapExceeded(std::size_t size, std::size_t cap)
      : Error("enumeration cap exceeded: " + std::to_string(size) +
              " elements, cap is " + std::to_string(cap)),
        size_(size),
        cap_(cap) {}
  std::size_t size() const noexcept { return size_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

class InvalidFramework : public Error {
 public:
  using Error::Error;
};

class NotAnExtension : public Error {
 public:
  using Error::Error;
};

class InvalidInstance : public Error {
 public:
  using Error::Error;
};

class UnsupportedSemantics : public Error {
 public:
  using Error::Error;
};

class InvalidArity : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable '" + name + "'") {}
};

class UnknownRelation : public Error {
 public:
  explicit UnknownRelation(const std::string& name)
      : Error("structure has no relation named '" + name + "'") {}
};

class OddK : public Error {
 public:
  explicit OddK(int k)
      : Error("parameter k must be even, got " + std::to_string(k)) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UndeclaredArgument : public Error {
 public:
  UndeclaredArgument(std::size_t line, const std::string& name)
      : Error("line " + std::to_string(line) + ": undeclared argument '" +
              name + "'"),
        name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class DuplicateArgument : public Error {
 public:
  DuplicateArgument(std::size_t line, const std::string& name)
      : Error("line " + std::to_string(line) + ": duplicate argument '" +
              name + "'") {}
};

class NotThreeCnfTwo : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace argudyn
