/*
   Copyright 2026 The ratdec authors

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

#ifndef RATDEC_PARSE_HPP
#define RATDEC_PARSE_HPP

#include <cctype>
#include <string>
#include <vector>

#include "ratdec/ratfun.hpp"

namespace ratdec {

namespace detail {

/// Recursive-descent parser for polynomial expressions over declared
/// variables: integers, identifiers, + - * ^ ( ); no division and no
/// implicit multiplication.
class PolyParser {
   public:
    PolyParser(const std::string& text, const std::vector<std::string>& vars,
               FieldCtx ctx)
        : text_(text), vars_(vars), ctx_(std::move(ctx)) {}

    MultiPoly parse() {
        MultiPoly p = expression();
        skip_ws();
        if (pos_ != text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return p;
    }

   private:
    MultiPoly expression() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (take() == '-');
        MultiPoly acc = term();
        if (negate) acc = -acc;
        while (true) {
            skip_ws();
            const char c = peek();
            if (c == '+' || c == '-') {
                take();
                MultiPoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = power();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                take();
                acc *= power();
            } else if (peek() == '/') {
                throw parse_error(
                    "division is allowed only once at the top level", pos_);
            } else {
                return acc;
            }
        }
    }

    MultiPoly power() {
        MultiPoly base = primary();
        skip_ws();
        if (peek() == '^') {
            take();
            skip_ws();
            const std::size_t at = pos_;
            if (!std::isdigit(static_cast<unsigned char>(peek())))
                throw parse_error("exponent must be a nonnegative integer", at);
            unsigned long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                e = e * 10 + static_cast<unsigned long>(take() - '0');
                if (e > 100000) throw parse_error("exponent too large", at);
            }
            return base.pow(e);
        }
        return base;
    }

    MultiPoly primary() {
        skip_ws();
        const std::size_t at = pos_;
        const char c = peek();
        if (c == '(') {
            take();
            MultiPoly inner = expression();
            skip_ws();
            if (peek() != ')') throw parse_error("expected ')'", pos_);
            take();
            return inner;
        }
        if (c == '-') {
            take();
            return -primary();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                digits += take();
            return MultiPoly::constant(
                ctx_, static_cast<unsigned>(vars_.size()),
                FieldElement::from_integer(ctx_, mpz_class(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name;
            while (std::isalnum(static_cast<unsigned char>(peek())) ||
                   peek() == '_')
                name += take();
            for (std::size_t i = 0; i < vars_.size(); ++i)
                if (vars_[i] == name)
                    return MultiPoly::variable(
                        ctx_, static_cast<unsigned>(vars_.size()),
                        static_cast<unsigned>(i));
            // aliases x, y, z for up to three variables; T for one
            static const std::vector<std::string> aliases{"x", "y", "z"};
            for (std::size_t i = 0; i < aliases.size() && i < vars_.size(); ++i)
                if (aliases[i] == name)
                    return MultiPoly::variable(
                        ctx_, static_cast<unsigned>(vars_.size()),
                        static_cast<unsigned>(i));
            if (vars_.size() == 1 && (name == "T" || name == "t"))
                return MultiPoly::variable(ctx_, 1, 0);
            throw parse_error("unknown variable '" + name + "'", at);
        }
        throw parse_error("expected a number, variable or '('", at);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    FieldCtx ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline std::vector<std::string> default_var_names(unsigned nvars) {
    std::vector<std::string> names;
    for (unsigned i = 1; i <= nvars; ++i)
        names.push_back("X" + std::to_string(i));
    return names;
}

inline MultiPoly parse_polynomial(const std::string& text,
                                  const std::vector<std::string>& vars,
                                  const FieldCtx& ctx) {
    return detail::PolyParser(text, vars, ctx).parse();
}

/// A rational function is one polynomial expression, or two separated by a
/// single '/' at parenthesis depth zero.
inline RationalFunctionMV parse_rational_function(
    const std::string& text, const std::vector<std::string>& vars,
    const FieldCtx& ctx) {
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == '/' && depth == 0) {
            if (split != std::string::npos)
                throw parse_error("only one top-level division is allowed", i);
            split = i;
        }
    }
    if (split == std::string::npos) {
        return RationalFunctionMV::from_poly(parse_polynomial(text, vars, ctx));
    }
    const std::string num = text.substr(0, split);
    const std::string den = text.substr(split + 1);
    MultiPoly n = parse_polynomial(num, vars, ctx);
    MultiPoly d = parse_polynomial(den, vars, ctx);
    if (d.is_zero()) throw zero_denominator();
    return RationalFunctionMV(std::move(n), std::move(d));
}

}  // namespace ratdec

#endif
