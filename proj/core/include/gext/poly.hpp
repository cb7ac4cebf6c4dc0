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

#ifndef GEXT_POLY_HPP
#define GEXT_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gext/errors.hpp"
#include "gext/rational.hpp"

namespace gext {

// Exponent vector, one nonnegative slot per ring variable.
using Exponents = std::vector<int>;

int expo_total_degree(const Exponents& e);

// Descending lex, so x-heavy terms come first when iterating.
struct LexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
};

// Image of one variable under a monomial substitution: coeff * prod(var^expo).
struct MonomialImage {
    Rat coeff;
    Exponents expo;
};

// Truncated multivariate polynomial over the rationals.
//
// Stored terms always have nonzero coefficient and, when a truncation order N
// is set, total degree < N (terms of degree >= N are unknown, not zero).
// All arithmetic re-truncates so this invariant is preserved.  A Poly without
// a truncation order is an exact polynomial.
class Poly {
public:
    using TermMap = std::map<Exponents, Rat, LexGreater>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars, std::optional<int> trunc = std::nullopt);

    static Poly zero(std::vector<std::string> vars, std::optional<int> trunc = std::nullopt);
    static Poly constant(std::vector<std::string> vars, const Rat& c,
                         std::optional<int> trunc = std::nullopt);
    static Poly variable(std::vector<std::string> vars, std::size_t i,
                         std::optional<int> trunc = std::nullopt);
    static Poly monomial(std::vector<std::string> vars, Exponents e, const Rat& c,
                         std::optional<int> trunc = std::nullopt);

    const std::vector<std::string>& vars() const { return vars_; }
    std::size_t nvars() const { return vars_.size(); }
    std::optional<int> truncation() const { return trunc_; }
    bool exact() const { return !trunc_.has_value(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Exponents& e) const;
    bool contains(const Exponents& e) const { return terms_.count(e) != 0; }
    int var_index(const std::string& name) const;  // -1 if absent

    // Smallest total degree with a nonzero term.  Throws ZeroPolynomialError.
    int mult() const;
    // Largest stored total degree.  Throws ZeroPolynomialError.
    int total_degree() const;
    int degree_in(std::size_t i) const;
    bool depends_on(std::size_t i) const;

    // min over stored terms of <w, exponents>.  Throws ZeroPolynomialError.
    Rat weighted_mult(const std::vector<Rat>& w) const;

    Poly homogeneous_part(int d) const;
    Poly leading_form() const;
    bool is_homogeneous() const;

    Poly truncated(int order) const;
    Poly as_exact() const;  // drop the truncation marker

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

    Poly scaled(const Rat& c) const;
    Poly pow(int k) const;
    Poly derivative(std::size_t i) const;

    // var i -> images[i].  Truncation is kept sound only when every image of a
    // variable has zero constant term, or when this is exact; otherwise throws
    // TruncationError.
    Poly substitute(const std::vector<Poly>& images) const;

    // var i -> map[i].coeff * monomial(map[i].expo); composition of maps equals
    // the map of compositions.
    Poly substitute_monomial_map(const std::vector<MonomialImage>& map) const;

    bool divisible_by_var_power(std::size_t i, int k, std::string* witness = nullptr) const;
    // F / var_i^k; throws NotDivisibleError with a witness monomial.
    Poly divide_by_var_power(std::size_t i, int k) const;

    Poly set_var_zero(std::size_t i) const;
    Poly shift_var(std::size_t i, const Rat& c) const;    // var -> var + c
    Poly rescale_var(std::size_t i, const Rat& c) const;  // var -> c * var
    Poly swap_vars(std::size_t i, std::size_t j) const;
    Poly renamed(std::vector<std::string> newnames) const;

    // Evaluates the stored part at a rational point.
    Rat eval(const std::vector<Rat>& point) const;

    // Projection onto a subset of the variables; every dropped variable must
    // be absent from the support.
    Poly keep_vars(const std::vector<std::size_t>& keep, std::vector<std::string> newnames) const;

    std::string str() const;
    std::string monomial_str(const Exponents& e) const;

private:
    void insert_term(const Exponents& e, const Rat& c);
    void check_same_ring(const Poly& o) const;
    std::optional<int> combined_trunc(const Poly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
    std::optional<int> trunc_;
};

// Content-normalized copy: integer coefficients, content 1, positive leading
// coefficient (in the descending-lex term order); returns the removed factor.
Poly primitive_part(const Poly& p, Rat* factor = nullptr);

}  // namespace gext

#endif
