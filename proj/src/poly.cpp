#include "ivpoly/poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ivpoly {

// ---------------------------------------------------------------- PolyQ ----

PolyQ::PolyQ(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PolyQ::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

PolyQ PolyQ::constant(const Rat& c) {
    PolyQ f;
    if (c != 0) f.coeffs_.push_back(c);
    return f;
}

PolyQ PolyQ::monomial(const Rat& c, std::size_t degree) {
    PolyQ f;
    if (c != 0) {
        f.coeffs_.assign(degree + 1, Rat(0));
        f.coeffs_.back() = c;
    }
    return f;
}

PolyQ PolyQ::variable() { return monomial(Rat(1), 1); }

int PolyQ::degree() const {
    if (is_zero()) {
        throw std::logic_error("degree of the zero polynomial");
    }
    return static_cast<int>(coeffs_.size()) - 1;
}

Rat PolyQ::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rat(0);
}

const Rat& PolyQ::leading() const {
    if (is_zero()) {
        throw std::logic_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

bool PolyQ::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

Rat PolyQ::eval(const Rat& point) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * point + *it;
    }
    return acc;
}

PolyQ PolyQ::compose(const PolyQ& inner) const {
    PolyQ acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * inner + constant(*it);
    }
    return acc;
}

PolyQ PolyQ::derivative() const {
    if (coeffs_.size() <= 1) return PolyQ();
    std::vector<Rat> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
    }
    return PolyQ(std::move(out));
}

PolyQ PolyQ::pow(unsigned exponent) const {
    PolyQ result = constant(Rat(1));
    PolyQ base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

PolyQ PolyQ::operator-() const {
    std::vector<Rat> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
    return PolyQ(std::move(out));
}

PolyQ operator+(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
    return PolyQ(std::move(out));
}

PolyQ operator-(const PolyQ& a, const PolyQ& b) {
    std::vector<Rat> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
    return PolyQ(std::move(out));
}

PolyQ operator*(const PolyQ& a, const PolyQ& b) {
    if (a.is_zero() || b.is_zero()) return PolyQ();
    std::vector<Rat> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return PolyQ(std::move(out));
}

PolyQ operator*(const Rat& s, const PolyQ& a) {
    if (s == 0) return PolyQ();
    std::vector<Rat> out(a.coeffs_.size());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] = s * a.coeffs_[i];
    return PolyQ(std::move(out));
}

// ----------------------------------------------------------- MonicPolyZ ----

MonicPolyZ::MonicPolyZ(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 2) {
        throw std::domain_error("monic polynomial must have degree >= 1");
    }
    if (coeffs_.back() != 1) {
        throw std::domain_error("polynomial is not monic");
    }
}

MonicPolyZ MonicPolyZ::from_poly(const PolyQ& f) {
    auto m = try_from_poly(f);
    if (!m) {
        throw std::domain_error("not a monic integer polynomial of degree >= 1");
    }
    return *m;
}

std::optional<MonicPolyZ> MonicPolyZ::try_from_poly(const PolyQ& f) {
    if (f.is_zero() || f.degree() < 1 || f.leading() != 1 || !f.is_integral()) {
        return std::nullopt;
    }
    std::vector<Int> coeffs;
    coeffs.reserve(f.coeffs().size());
    for (const Rat& c : f.coeffs()) coeffs.push_back(c.get_num());
    return MonicPolyZ(std::move(coeffs));
}

MonicPolyZ MonicPolyZ::linear_root(const Int& a) {
    return MonicPolyZ(std::vector<Int>{-a, 1});
}

Int MonicPolyZ::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Int(0);
}

PolyQ MonicPolyZ::to_poly() const {
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const Int& c : coeffs_) out.emplace_back(c);
    return PolyQ(std::move(out));
}

MonicPolyZ operator*(const MonicPolyZ& a, const MonicPolyZ& b) {
    std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return MonicPolyZ(std::move(out));
}

// ------------------------------------------------------------- division ----

DivRem divrem(const PolyQ& f, const PolyQ& g) {
    if (g.is_zero()) {
        throw std::domain_error("polynomial division by zero");
    }
    if (f.is_zero() || f.degree() < g.degree()) {
        return {PolyQ(), f};
    }
    std::vector<Rat> rem = f.coeffs();
    const std::vector<Rat>& div = g.coeffs();
    const int dg = g.degree();
    std::vector<Rat> quot(rem.size() - dg, Rat(0));
    for (int top = static_cast<int>(rem.size()) - 1; top >= dg; --top) {
        Rat t = rem[top] / div.back();
        if (t != 0) {
            quot[top - dg] = t;
            for (int j = 0; j < dg; ++j) {
                rem[top - dg + j] -= t * div[j];
            }
        }
        rem[top] = 0;
    }
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

DivRem divrem(const PolyQ& f, const MonicPolyZ& p) { return divrem(f, p.to_poly()); }

PolyQ exact_div(const PolyQ& f, const PolyQ& g) {
    DivRem dr = divrem(f, g);
    if (!dr.remainder.is_zero()) {
        throw std::logic_error("exact_div: division left a nonzero remainder");
    }
    return dr.quotient;
}

// ------------------------------------------------------------------ gcd ----

namespace {

// Integer-coefficient view with positive content divided out.
std::vector<Int> primitive_from_rational(const PolyQ& f) {
    Int den_lcm = 1;
    for (const Rat& c : f.coeffs()) {
        den_lcm = lcm(den_lcm, Int(c.get_den()));
    }
    std::vector<Int> out;
    out.reserve(f.coeffs().size());
    Int content = 0;
    for (const Rat& c : f.coeffs()) {
        Int v = Int(c.get_num()) * (den_lcm / Int(c.get_den()));
        content = gcd(content, v);
        out.push_back(v);
    }
    for (Int& v : out) v /= content; // content != 0: f nonzero
    return out;
}

void trim_int(std::vector<Int>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

void primitive_part_in_place(std::vector<Int>& f) {
    trim_int(f);
    if (f.empty()) return;
    Int content = 0;
    for (const Int& v : f) content = gcd(content, v);
    if (f.back() < 0) content = -content;
    for (Int& v : f) v /= content;
}

// Pseudo-remainder of a by b over Z: lc(b)^(deg a - deg b + 1) * a mod b.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (a.size() > db) {
        Int lead = a.back();
        for (Int& v : a) v *= lb;
        std::size_t shift = a.size() - 1 - db;
        for (std::size_t j = 0; j <= db; ++j) {
            a[shift + j] -= lead * b[j];
        }
        trim_int(a);
        if (a.empty()) break;
    }
    return a;
}

PolyQ monic_over_q(const std::vector<Int>& f) {
    std::vector<Rat> out;
    out.reserve(f.size());
    Rat inv_lead = make_rat(1, f.back());
    for (const Int& v : f) out.push_back(Rat(v) * inv_lead);
    return PolyQ(std::move(out));
}

} // namespace

PolyQ gcd(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() && g.is_zero()) {
        throw std::domain_error("gcd(0, 0) is undefined");
    }
    if (f.is_zero()) return (Rat(1) / g.leading()) * g;
    if (g.is_zero()) return (Rat(1) / f.leading()) * f;

    std::vector<Int> a = primitive_from_rational(f);
    std::vector<Int> b = primitive_from_rational(g);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        std::vector<Int> r = pseudo_rem(a, b);
        primitive_part_in_place(r);
        a = std::move(b);
        b = std::move(r);
    }
    return monic_over_q(a);
}

SquarefreeResult squarefree_part(const MonicPolyZ& p) {
    PolyQ f = p.to_poly();
    PolyQ g = gcd(f, f.derivative());
    if (g.degree() == 0) {
        return {p, true};
    }
    PolyQ sf = exact_div(f, g);
    return {MonicPolyZ::from_poly(sf), false};
}

} // namespace ivpoly
