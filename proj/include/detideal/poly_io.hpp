#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "detideal/errors.hpp"
#include "detideal/polynomial.hpp"

namespace detideal {

// Text form of a polynomial: signed sum of terms, '*' between factors,
// '^' for powers, parentheses for grouping, e.g. "a1*b2 - a2*b1" or
// "x11^2 - 3*(x12 + 1)".  "p/q" after an integer is a rational literal.
template <class F>
class PolyParser {
  public:
    PolyParser(const RingPtr& ring, const std::string& text) : ring_(ring), text_(text) {}

    Polynomial<F> parse() {
        Polynomial<F> p = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return p;
    }

  private:
    Polynomial<F> parse_expr() {
        Polynomial<F> acc = Polynomial<F>::zero(ring_);
        bool first = true;
        while (true) {
            skip_ws();
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = text_[pos_++] == '-';
            } else if (!first) {
                break;
            }
            Polynomial<F> t = parse_term();
            acc = neg ? acc - t : acc + t;
            first = false;
            skip_ws();
            if (peek() != '+' && peek() != '-') break;
        }
        if (first) throw ParseError("expected a term", pos_);
        return acc;
    }

    Polynomial<F> parse_term() {
        Polynomial<F> acc = parse_factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * parse_factor();
            } else if (peek() == '/') {
                ++pos_;
                skip_ws();
                if (!std::isdigit(peek())) throw ParseError("divisor must be an integer literal", pos_);
                std::size_t at = pos_;
                F fld(ring_->field());
                auto d = fld.from_decimal_string(parse_digits());
                if (fld.is_zero(d)) throw ParseError("division by zero", at);
                acc = acc.scaled(fld.inv(d));
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial<F> parse_factor() {
        Polynomial<F> base = parse_base();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            if (!std::isdigit(peek())) throw ParseError("exponent must be a nonnegative integer", pos_);
            std::string e = parse_digits();
            if (e.size() > 3 || std::stoi(e) > 255) throw ParseError("exponent too large", at);
            return base.pow(static_cast<unsigned>(std::stoi(e)));
        }
        return base;
    }

    Polynomial<F> parse_base() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial<F> p = parse_expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            ++pos_;
            return p;
        }
        if (std::isdigit(c)) {
            return Polynomial<F>::from_coeff(ring_, F(ring_->field()).from_decimal_string(parse_digits()));
        }
        if (std::isalpha(c) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(peek()) || peek() == '_')) ++pos_;
            std::string name = text_.substr(start, pos_ - start);
            if (!ring_->vars().contains(name)) {
                throw ParseError("unknown variable \"" + name + "\"", start);
            }
            return Polynomial<F>::variable(ring_, name);
        }
        throw ParseError("expected a number, variable, or '('", pos_);
    }

    std::string parse_digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(peek())) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    RingPtr ring_;
    const std::string& text_;
    std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_poly(const RingPtr& ring, const std::string& text) {
    return PolyParser<F>(ring, text).parse();
}

// Round-trippable rendering: descending term order, explicit '*', '^'
// powers, symmetric coefficient representatives over GF(p).  The one-argument
// form prints in the canonical (grevlex) storage order; pass an order to
// print descending under it.
template <class F>
std::string to_string(const Polynomial<F>& p, const MonomialOrder& ord = MonomialOrder::grevlex()) {
    if (p.is_zero()) return "0";
    const F& fld = p.field();
    const VariableSet& vars = p.ring()->vars();
    std::vector<Term<F>> terms = p.terms();
    if (ord.kind() != OrderKind::GrevLex) {
        std::sort(terms.begin(), terms.end(),
                  [&ord](const Term<F>& a, const Term<F>& b) { return ord.cmp(a.mono, b.mono) > 0; });
    }
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        std::string c = fld.to_string(t.coeff);
        bool neg = !c.empty() && c[0] == '-';
        std::string mag = neg ? c.substr(1) : c;
        if (first) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (t.mono.is_one()) {
            out += mag;
        } else if (mag == "1") {
            out += t.mono.to_string(vars);
        } else {
            out += mag + "*" + t.mono.to_string(vars);
        }
        first = false;
    }
    return out;
}

}  // namespace detideal
