#include "ivpoly/expr.hpp"

#include <cctype>

#include "ivpoly/errors.hpp"

namespace ivpoly {

namespace {

// Recursive-descent parser.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power | power)*      (adjacency multiplies)
//   power  := atom ['^' digits]
//   atom   := digits | 'x' | 'X' | '(' expr ')'
//
// Division is only defined by a nonzero constant.
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    PolyQ parse() {
        PolyQ result = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected character", pos_);
        }
        return result;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom(char c) {
        return c == '(' || c == 'x' || c == 'X' || std::isdigit(static_cast<unsigned char>(c));
    }

    PolyQ parse_expr() {
        PolyQ acc;
        char sign = '+';
        char c = peek();
        if (c == '+' || c == '-') {
            sign = c;
            ++pos_;
        }
        acc = (sign == '-') ? -parse_term() : parse_term();
        while (true) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            PolyQ term = parse_term();
            acc = (c == '-') ? acc - term : acc + term;
        }
        return acc;
    }

    PolyQ parse_term() {
        PolyQ acc = parse_power();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_power();
            } else if (c == '/') {
                std::size_t at = pos_;
                ++pos_;
                PolyQ divisor = parse_power();
                if (divisor.is_zero()) {
                    throw ParseError("division by zero", at);
                }
                if (divisor.degree() != 0) {
                    throw ParseError("division by a nonconstant polynomial", at);
                }
                acc = (Rat(1) / divisor.coeff(0)) * acc;
            } else if (starts_atom(c)) {
                acc = acc * parse_power(); // implicit multiplication
            } else {
                break;
            }
        }
        return acc;
    }

    PolyQ parse_power() {
        PolyQ base = parse_atom();
        if (peek() == '^') {
            std::size_t at = pos_;
            ++pos_;
            Int e = parse_digits();
            if (e > 512) {
                throw ParseError("exponent too large", at);
            }
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    PolyQ parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            PolyQ inner = parse_expr();
            if (peek() != ')') {
                throw ParseError("expected ')'", pos_);
            }
            ++pos_;
            return inner;
        }
        if (c == 'x' || c == 'X') {
            ++pos_;
            return PolyQ::variable();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyQ::constant(Rat(parse_digits()));
        }
        throw ParseError("expected a number, 'x', or '('", pos_);
    }

    Int parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (pos_ == start) {
            throw ParseError("expected digits", pos_);
        }
        // explicit base 10: leading zeros must not trigger octal detection
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

PolyQ parse_poly(std::string_view text) { return Parser(text).parse(); }

std::string poly_to_string(const PolyQ& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        Rat c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        bool first = out.empty();
        bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (k == 0) {
            out += to_string(mag);
        } else {
            if (!unit) {
                out += to_string(mag);
                out += "*";
            }
            out += (k == 1) ? "x" : "x^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<Rat> parse_rat_list(std::string_view text) {
    std::vector<Rat> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece =
            text.substr(start, comma == std::string_view::npos ? text.size() - start
                                                               : comma - start);
        out.push_back(parse_rat(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<Int> parse_int_list(std::string_view text) {
    std::vector<Int> out;
    for (const Rat& q : parse_rat_list(text)) {
        out.push_back(to_int(q));
    }
    return out;
}

} // namespace ivpoly
