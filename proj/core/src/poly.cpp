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
// See the License for the specific language governing permission and
// limitations under the License.

#include "gext/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gext {

int expo_total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

std::string rat_to_string(const Rat& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << "/" << den(q);
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw std::invalid_argument("zero denominator");
        return Rat(n, d);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

Poly::Poly(std::vector<std::string> vars, std::optional<int> trunc)
    : vars_(std::move(vars)), trunc_(trunc) {}

Poly Poly::zero(std::vector<std::string> vars, std::optional<int> trunc) {
    return Poly(std::move(vars), trunc);
}

Poly Poly::constant(std::vector<std::string> vars, const Rat& c, std::optional<int> trunc) {
    Poly p(std::move(vars), trunc);
    if (c != 0 && (!trunc || *trunc > 0)) p.terms_[Exponents(p.nvars(), 0)] = c;
    return p;
}

Poly Poly::variable(std::vector<std::string> vars, std::size_t i, std::optional<int> trunc) {
    Poly p(std::move(vars), trunc);
    Exponents e(p.nvars(), 0);
    e.at(i) = 1;
    if (!trunc || *trunc > 1) p.terms_[e] = 1;
    return p;
}

Poly Poly::monomial(std::vector<std::string> vars, Exponents e, const Rat& c,
                    std::optional<int> trunc) {
    Poly p(std::move(vars), trunc);
    if (e.size() != p.nvars()) throw Error("monomial: exponent arity mismatch");
    for (int x : e)
        if (x < 0) throw Error("monomial: negative exponent");
    if (c != 0 && (!trunc || expo_total_degree(e) < *trunc)) p.terms_[std::move(e)] = c;
    return p;
}

Rat Poly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Poly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

int Poly::mult() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    int m = -1;
    for (const auto& [e, c] : terms_) {
        int d = expo_total_degree(e);
        if (m < 0 || d < m) m = d;
    }
    return m;
}

int Poly::total_degree() const {
    if (terms_.empty()) throw ZeroPolynomialError();
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, expo_total_degree(e));
    return m;
}

int Poly::degree_in(std::size_t i) const {
    int m = 0;
    for (const auto& [e, c] : terms_) m = std::max(m, e.at(i));
    return m;
}

bool Poly::depends_on(std::size_t i) const {
    for (const auto& [e, c] : terms_)
        if (e.at(i) > 0) return true;
    return false;
}

Rat Poly::weighted_mult(const std::vector<Rat>& w) const {
    if (terms_.empty()) throw ZeroPolynomialError();
    if (w.size() != nvars()) throw Error("weighted_mult: weight arity mismatch");
    bool first = true;
    Rat best = 0;
    for (const auto& [e, c] : terms_) {
        Rat v = 0;
        for (std::size_t i = 0; i < w.size(); ++i) v += w[i] * e[i];
        if (first || v < best) best = v, first = false;
    }
    return best;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(vars_, trunc_);
    if (trunc_ && d >= *trunc_) throw TruncationError(d + 1);
    for (const auto& [e, c] : terms_)
        if (expo_total_degree(e) == d) r.terms_[e] = c;
    return r;
}

Poly Poly::leading_form() const { return homogeneous_part(mult()); }

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = expo_total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (expo_total_degree(e) != d) return false;
    return true;
}

Poly Poly::truncated(int order) const {
    Poly r(vars_, trunc_ ? std::min(*trunc_, order) : order);
    for (const auto& [e, c] : terms_)
        if (expo_total_degree(e) < *r.trunc_) r.terms_[e] = c;
    return r;
}

Poly Poly::as_exact() const {
    Poly r(vars_);
    r.terms_ = terms_;
    return r;
}

void Poly::check_same_ring(const Poly& o) const {
    if (vars_ != o.vars_) throw Error("polynomial rings differ");
}

std::optional<int> Poly::combined_trunc(const Poly& o) const {
    if (!trunc_) return o.trunc_;
    if (!o.trunc_) return trunc_;
    return std::min(*trunc_, *o.trunc_);
}

void Poly::insert_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    if (trunc_ && expo_total_degree(e) >= *trunc_) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_, trunc_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    Poly r(vars_, combined_trunc(o));
    for (const auto& [e, c] : terms_) r.insert_term(e, c);
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    Poly r(vars_, combined_trunc(o));
    Exponents e(nvars());
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.insert_term(e, ca * cb);
        }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(vars_, trunc_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw Error("pow: negative exponent");
    Poly r = Poly::constant(vars_, 1, trunc_);
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

Poly Poly::derivative(std::size_t i) const {
    Poly r(vars_, trunc_ ? std::optional<int>(*trunc_ - 1) : std::nullopt);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents d = e;
        d[i] -= 1;
        r.terms_[d] = c * e[i];
    }
    return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars()) throw Error("substitute: arity mismatch");
    if (trunc_) {
        for (const auto& im : images)
            if (im.coeff(Exponents(im.nvars(), 0)) != 0)
                throw TruncationError(*trunc_ + total_degree());
    }
    if (images.empty()) throw Error("substitute: empty image list");
    std::optional<int> t = trunc_;
    for (const auto& im : images) {
        if (im.truncation()) t = t ? std::min(*t, *im.truncation()) : im.truncation();
    }
    Poly r = Poly::zero(images[0].vars(), t);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(images[0].vars(), c, t);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        r = r + term;
    }
    return r;
}

Poly Poly::substitute_monomial_map(const std::vector<MonomialImage>& map) const {
    if (map.size() != nvars()) throw Error("substitute_monomial_map: arity mismatch");
    for (const auto& m : map)
        if (m.coeff == 0) throw Error("substitute_monomial_map: zero image coefficient");
    Poly r(vars_, trunc_);
    Exponents e2(nvars());
    for (const auto& [e, c] : terms_) {
        std::fill(e2.begin(), e2.end(), 0);
        Rat c2 = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            c2 *= rat_pow(map[i].coeff, e[i]);
            for (std::size_t j = 0; j < e2.size(); ++j) e2[j] += e[i] * map[i].expo[j];
        }
        r.insert_term(e2, c2);
    }
    return r;
}

bool Poly::divisible_by_var_power(std::size_t i, int k, std::string* witness) const {
    for (const auto& [e, c] : terms_)
        if (e[i] < k) {
            if (witness) *witness = monomial_str(e);
            return false;
        }
    return true;
}

Poly Poly::divide_by_var_power(std::size_t i, int k) const {
    std::string w;
    if (!divisible_by_var_power(i, k, &w)) throw NotDivisibleError(w);
    Poly r(vars_, trunc_ ? std::optional<int>(*trunc_ - k) : std::nullopt);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        d[i] -= k;
        r.terms_[d] = c;
    }
    return r;
}

Poly Poly::set_var_zero(std::size_t i) const {
    Poly r(vars_, trunc_);
    for (const auto& [e, c] : terms_)
        if (e[i] == 0) r.terms_[e] = c;
    return r;
}

Poly Poly::shift_var(std::size_t i, const Rat& c) const {
    if (c == 0) return *this;
    if (trunc_) throw TruncationError(*trunc_);
    std::vector<Poly> images;
    for (std::size_t j = 0; j < nvars(); ++j) images.push_back(Poly::variable(vars_, j));
    images[i] = images[i] + Poly::constant(vars_, c);
    return substitute(images);
}

Poly Poly::rescale_var(std::size_t i, const Rat& c) const {
    if (c == 0) throw Error("rescale_var: zero scale");
    Poly r(vars_, trunc_);
    for (const auto& [e, k] : terms_) r.terms_[e] = k * rat_pow(c, e[i]);
    return r;
}

Poly Poly::swap_vars(std::size_t i, std::size_t j) const {
    Poly r(vars_, trunc_);
    for (const auto& [e, c] : terms_) {
        Exponents d = e;
        std::swap(d[i], d[j]);
        r.terms_[d] = c;
    }
    return r;
}

Poly Poly::renamed(std::vector<std::string> newnames) const {
    if (newnames.size() != nvars()) throw Error("renamed: arity mismatch");
    Poly r(std::move(newnames), trunc_);
    r.terms_ = terms_;
    return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != nvars()) throw Error("eval: arity mismatch");
    Rat v = 0;
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t *= rat_pow(point[i], e[i]);
        v += t;
    }
    return v;
}

Poly Poly::keep_vars(const std::vector<std::size_t>& keep, std::vector<std::string> newnames) const {
    std::vector<bool> kept(nvars(), false);
    for (std::size_t i : keep) kept.at(i) = true;
    Poly r(std::move(newnames), trunc_);
    for (const auto& [e, c] : terms_) {
        Exponents d(keep.size());
        for (std::size_t i = 0; i < nvars(); ++i)
            if (!kept[i] && e[i] != 0) throw Error("keep_vars: support includes dropped variable");
        for (std::size_t j = 0; j < keep.size(); ++j) d[j] = e[keep[j]];
        r.terms_[d] = c;
    }
    return r;
}

std::string Poly::monomial_str(const Exponents& e) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any) os << "*";
        os << vars_[i];
        if (e[i] > 1) os << "^" << e[i];
        any = true;
    }
    if (!any) os << "1";
    return os.str();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool isconst = expo_total_degree(e) == 0;
        if (a != 1 || isconst) {
            os << rat_to_string(a);
            if (!isconst) os << "*";
        }
        if (!isconst) os << monomial_str(e);
        first = false;
    }
    return os.str();
}

Poly primitive_part(const Poly& p, Rat* factor) {
    if (p.is_zero()) {
        if (factor) *factor = 0;
        return p;
    }
    Int g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        g = int_gcd(g, num(c));
        l = l / int_gcd(l, den(c)) * den(c);
    }
    Rat scale = Rat(l, g);
    if (p.terms().begin()->second < 0) scale = -scale;
    if (factor) *factor = Rat(1) / scale;
    return p.scaled(scale);
}

}  // namespace gext
