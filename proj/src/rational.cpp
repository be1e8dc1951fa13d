#include "ivpoly/rational.hpp"

#include <stdexcept>

#include "ivpoly/errors.hpp"

namespace ivpoly {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    Rat q(num, den);
    q.canonicalize();
    return q;
}

Int to_int(const Rat& q) {
    if (!is_integer(q)) {
        throw std::domain_error("rational " + to_string(q) + " is not an integer");
    }
    return q.get_num();
}

std::string to_string(const Int& n) { return n.get_str(); }

std::string to_string(const Rat& q) {
    if (is_integer(q)) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    auto parse_int = [&]() -> Int {
        skip_ws();
        std::size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        std::size_t digits = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == digits) {
            throw ParseError("expected integer", pos);
        }
        return Int(std::string(text.substr(start, pos - start)), 10);
    };

    Int num = parse_int();
    Int den = 1;
    skip_ws();
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_int();
        if (den == 0) {
            throw ParseError("zero denominator", pos);
        }
    }
    skip_ws();
    if (pos != text.size()) {
        throw ParseError("trailing characters after rational", pos);
    }
    return make_rat(num, den);
}

} // namespace ivpoly
