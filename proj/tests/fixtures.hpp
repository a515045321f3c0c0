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

#include "argudyn/framework.hpp"

namespace fixtures {

using argudyn::ArgumentationFramework;

// a <-> b
inline ArgumentationFramework f1() { return ArgumentationFramework({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }

// a -> b -> c -> a
inline ArgumentationFramework f2() {
  return ArgumentationFramework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

// a -> b -> c
inline ArgumentationFramework f3() {
  return ArgumentationFramework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
}

// a <-> b, c <-> d
inline ArgumentationFramework f4() {
  return ArgumentationFramework({"a", "b", "c", "d"},
                                {{"a", "b"}, {"b", "a"}, {"c", "d"}, {"d", "c"}});
}

inline ArgumentationFramework self_loop() { return ArgumentationFramework({"a"}, {{"a", "a"}}); }

inline std::string data(const std::string& file) { return std::string(ARGUDYN_TEST_DATA) + "/" + file; }

}  // namespace fixtures
