// Copyright 2026 The gext authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GEXT_RATIONAL_HPP
#define GEXT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace gext {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline int sign(const Rat& q) {
    if (q > 0) return 1;
    if (q < 0) return -1;
    return 0;
}

inline Int num(const Rat& q) { return numerator(q); }
inline Int den(const Rat& q) { return denominator(q); }

inline Rat rat_pow(const Rat& q, long e) {
    if (e < 0) {
        if (q == 0) throw std::domain_error("rat_pow: 0^negative");
        return Rat(1) / rat_pow(q, -e);
    }
    Rat r = 1, base = q;
    long k = e;
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

inline Int int_pow(Int b, long e) {
    Int r = 1;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

// Floor of a rational, as an Int.
inline Int rat_floor(const Rat& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n % d != 0 && n < 0) t -= 1;
    return t;
}

std::string rat_to_string(const Rat& q);

// Parses "a", "-a" or "a/b". Throws std::invalid_argument on malformed text.
Rat rat_from_string(const std::string& s);

}  // namespace gext

#endif
