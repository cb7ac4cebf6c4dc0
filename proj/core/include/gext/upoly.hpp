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

#ifndef GEXT_UPOLY_HPP
#define GEXT_UPOLY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "gext/poly.hpp"
#include "gext/rational.hpp"

namespace gext {

// Dense univariate polynomial over the rationals; c[i] is the x^i coefficient.
// Backbone of the Sturm-sequence real-root machinery.  No floating point.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rat> c) : c_(std::move(c)) { normalize(); }
    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rat& a) { return UPoly({a}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& lead() const { return c_.back(); }
    Rat coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rat(0);
    }

    Rat eval(const Rat& x) const;
    UPoly derivative() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly scaled(const Rat& k) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    // Euclidean division; returns {quotient, remainder}.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

    UPoly monic() const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

UPoly upoly_gcd(UPoly a, UPoly b);          // monic gcd
UPoly squarefree_part(const UPoly& p);      // p / gcd(p, p')

// Sturm chain of p (after squarefree reduction handled by callers as needed).
std::vector<UPoly> sturm_chain(const UPoly& p);

// Number of distinct real roots in (a, b]; a < b, neither a root assumption is
// on the caller for boundary exactness (we count with the standard rule).
int count_roots_between(const std::vector<UPoly>& chain, const Rat& a, const Rat& b);
int count_real_roots(const UPoly& p);  // distinct, whole line

// Closed interval with rational endpoints containing exactly one real root.
struct RootInterval {
    Rat lo, hi;          // lo == hi iff the root is known exactly (rational)
    bool exact_rational;
    int multiplicity;    // multiplicity in the original polynomial
};

// Isolates all distinct real roots.  Rational roots are reported exactly.
// `complete` is false when the rational-root search could not be finished
// (coefficient factorization too large); such roots are still isolated but
// may be misreported as irrational.
struct RootIsolation {
    std::vector<RootInterval> roots;  // sorted increasing
    bool complete = true;
};
RootIsolation isolate_real_roots(const UPoly& p);

// Rational roots with multiplicity; `complete` false if the divisor
// enumeration had to give up.
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;
    bool complete = true;
};
RationalRoots rational_roots(const UPoly& p);

// Cauchy bound: all real roots lie in (-M, M).
Rat root_bound(const UPoly& p);

// Bivariate helpers ---------------------------------------------------------

// Views a Poly in exactly two variables as a UPoly in vars[which] with the
// other variable evaluated at `other_value`.
UPoly upoly_from_bivariate(const Poly& p, std::size_t which, const Rat& other_value);

// Resultant of p, q with respect to vars[which]; p, q in the same 2-variable
// ring.  Result is univariate in the other variable.
UPoly bivariate_resultant(const Poly& p, const Poly& q, std::size_t which);

// gcd of two bivariate polynomials (primitive, via content-resultant PRS).
Poly bivariate_gcd(const Poly& a, const Poly& b);

// Nonconstant iff the (homogeneous or not) bivariate polynomial has a repeated
// factor; used for isolated-singularity screening.
bool bivariate_squarefree(const Poly& g);

// Ternary form helper: true iff the cubic form f3(a,b,c) has a repeated linear
// factor over the complex numbers, i.e. f3 = l1^2*l2.  Detected through a
// common factor of f3 with its partial derivatives.
bool ternary_cubic_has_repeated_factor(const Poly& f3);

// Multivariate helpers shared by the resultant machinery -------------------

// Exact division a / b in the full ring; throws NotDivisibleError-like Error
// when the division is not exact.
Poly poly_exact_div(const Poly& a, const Poly& b);

// Resultant of p and q with respect to vars[which]; the result does not
// involve that variable.  Fraction-free Bareiss on the Sylvester matrix.
Poly resultant_wrt(const Poly& p, const Poly& q, std::size_t which);

}  // namespace gext

#endif
