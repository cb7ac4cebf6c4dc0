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

#include "gext/poly_parse.hpp"

#include <cctype>

namespace gext {

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& vars, std::optional<int> trunc,
           int line)
        : s_(s), vars_(vars), trunc_(trunc), line_(line) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, line_, static_cast<int>(pos_) + 1);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            if (eat('+'))
                p = p + term();
            else if (eat('-'))
                p = p - term();
            else
                break;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                eat('*');
                p = p * factor();
            } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '(') {
                p = p * factor();  // juxtaposition
            } else {
                break;
            }
        }
        return p;
    }

    int nat() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) fail("exponent too large");
            ++pos_;
        }
        return static_cast<int>(v);
    }

    Poly factor() {
        char c = peek();
        if (c == '(') {
            eat('(');
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) p = p.pow(nat());
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                n = n * 10 + (s_[pos_] - '0');
                ++pos_;
            }
            Rat q(n);
            if (eat('/')) {
                skip_ws();
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected denominator");
                Int d = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    d = d * 10 + (s_[pos_] - '0');
                    ++pos_;
                }
                if (d == 0) fail("zero denominator");
                q = Rat(n, d);
            }
            return Poly::constant(vars_, q, trunc_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name(1, c);
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                name += s_[pos_];
                ++pos_;
            }
            int idx = -1;
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name) idx = static_cast<int>(i);
            if (idx < 0) fail("unknown variable '" + name + "'");
            Poly p = Poly::variable(vars_, static_cast<std::size_t>(idx), trunc_);
            if (eat('^')) p = p.pow(nat());
            return p;
        }
        fail("expected factor");
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::optional<int> trunc_;
    int line_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                std::optional<int> trunc, int line_offset) {
    // Powers are expanded exactly; truncation is applied by Poly arithmetic.
    return Parser(text, vars, trunc, line_offset).parse();
}

}  // namespace gext
