/*
   Copyright 2026 The desing Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "desing/expression.hpp"

#include <cctype>

#include "desing/errors.hpp"

namespace desing {

namespace {

constexpr unsigned long kMaxExponent = 10000;

class Parser {
   public:
    Parser(std::string_view text, std::string_view variable) : s_(text), var_(variable) {}

    RationalFunction parse() {
        skip();
        if (pos_ == s_.size()) fail("empty expression");
        RationalFunction f = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return f;
    }

   private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    RationalFunction expr() {
        RationalFunction f = term();
        for (;;) {
            if (eat('+'))
                f += term();
            else if (eat('-'))
                f -= term();
            else
                return f;
        }
    }

    RationalFunction term() {
        RationalFunction f = unary();
        for (;;) {
            if (eat('*')) {
                f *= unary();
            } else if (eat('/')) {
                const std::size_t at = pos_;
                RationalFunction g = unary();
                if (g.is_zero()) throw ParseError("division by zero", at + 1);
                f /= g;
            } else {
                return f;
            }
        }
    }

    RationalFunction unary() {
        if (eat('-')) return -unary();
        return power();
    }

    RationalFunction power() {
        RationalFunction base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t start = pos_;
        Integer e = digits();
        if (pos_ == start) fail("expected an exponent");
        if (e > kMaxExponent) throw ParseError("exponent too large", start + 1);
        const auto n = static_cast<unsigned>(e.get_ui());
        return RationalFunction(desing::power(base.numerator(), n), desing::power(base.denominator(), n));
    }

    Integer digits() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) return 0;
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    RationalFunction atom() {
        skip();
        if (pos_ == s_.size()) fail("unexpected end of expression");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return RationalFunction(Rational(digits()));
        if (c == '(') {
            ++pos_;
            RationalFunction f = expr();
            if (!eat(')')) fail("expected ')'");
            return f;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            const std::string_view name = s_.substr(start, pos_ - start);
            if (name != var_) throw ParseError("unknown identifier '" + std::string(name) + "'", start + 1);
            return RationalFunction(Polynomial::variable());
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::string_view var_;
    std::size_t pos_ = 0;
};

int term_count(const Polynomial& p) {
    int n = 0;
    for (const auto& c : p.coefficients())
        if (c != 0) ++n;
    return n;
}

}  // namespace

RationalFunction parse_expression(std::string_view text, std::string_view variable) {
    return Parser(text, variable).parse();
}

std::string to_string(const Rational& c) { return c.get_str(); }

std::string to_string(const Polynomial& p, std::string_view variable) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coefficients()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative)
            out += '-';
        else if (!out.empty())
            out += '+';
        const Rational a = abs(c);
        if (i == 0) {
            out += to_string(a);
            continue;
        }
        if (a != 1) out += to_string(a) + "*";
        out += variable;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::string to_string(const RationalFunction& f, std::string_view variable) {
    const std::string num = to_string(f.numerator(), variable);
    if (f.is_polynomial()) return num;
    const std::string den = to_string(f.denominator(), variable);
    const std::string n = term_count(f.numerator()) > 1 ? "(" + num + ")" : num;
    const std::string d = term_count(f.denominator()) > 1 ? "(" + den + ")" : den;
    return n + "/" + d;
}

}  // namespace desing
