#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "polynomial.hpp"

namespace gradealg {

// Grammar (whitespace ignored between tokens):
//
//   expr    = term { ("+" | "-") term } ;
//   term    = factor { ("*" | "/") factor } ;
//   factor  = ("+" | "-") factor | base [ "^" integer ] ;
//   base    = integer | identifier | "(" expr ")" ;
//   integer = digit { digit } ;
//   identifier = letter_or_underscore { letter_or_digit_or_underscore } ;
//
// The right operand of "/" must evaluate to a nonzero constant.

namespace detail {

template <class F>
class PolyParser {
public:
    PolyParser(std::string_view text, const RingPtr<F>& ring) : text_(text), ring_(ring) {}

    Polynomial<F> parse() {
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("empty expression");
        auto p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return p;
    }

private:
    Polynomial<F> expr() {
        auto acc = term();
        for (;;) {
            skip_ws();
            if (eat('+')) acc = acc + term();
            else if (eat('-')) acc = acc - term();
            else return acc;
        }
    }

    Polynomial<F> term() {
        auto acc = factor();
        for (;;) {
            skip_ws();
            if (eat('*')) {
                acc = acc * factor();
            } else if (eat('/')) {
                auto den = factor();
                if (!den.is_constant()) fail("divisor must be a constant");
                if (den.is_zero())
                    throw InputError("division by a literal that is zero in " + ring_->field.name());
                acc = acc.scaled(ring_->field.inv(den.terms().front().coeff));
            } else {
                return acc;
            }
        }
    }

    Polynomial<F> factor() {
        skip_ws();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        auto b = base();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("exponent must be a non-negative integer");
            if (pos_ - start > 5) fail("exponent too large");
            b = b.pow(std::stoi(std::string(text_.substr(start, pos_ - start))));
        }
        return b;
    }

    Polynomial<F> base() {
        skip_ws();
        if (pos_ == text_.size()) fail("unexpected end of expression");
        char c = text_[pos_];
        if (eat('(')) {
            auto e = expr();
            skip_ws();
            if (!eat(')')) fail("missing ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial<F>::constant(ring_, ring_->field.from_literal(text_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            auto name = text_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'");
            return Polynomial<F>::variable(ring_, *idx);
        }
        fail("unexpected character");
    }

    bool eat(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    std::string_view text_;
    RingPtr<F> ring_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Polynomial<F> parse_poly(std::string_view text, const RingPtr<F>& ring) {
    return detail::PolyParser<F>(text, ring).parse();
}

template <class F>
std::string to_string(const Monomial& m, const Ring<F>& ring) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.names[i];
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

/// Canonical rendering: grevlex-descending terms, unit coefficients
/// omitted, e.g. "x1*x2 - 3/2*x3^2".
template <class F>
std::string to_string(const Polynomial<F>& p) {
    if (p.is_zero()) return "0";
    const auto& fld = p.field();
    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        auto c = t.coeff;
        bool negative = fld.is_negative(c);
        if (negative) c = fld.neg(c);
        if (first) out += negative ? "-" : "";
        else out += negative ? " - " : " + ";
        first = false;
        if (t.mono.is_one()) {
            out += fld.to_string(c);
        } else {
            if (!fld.is_one(c)) out += fld.to_string(c) + '*';
            out += to_string(t.mono, *p.ring());
        }
    }
    return out;
}

}  // namespace gradealg
