#include "ivpoly/detail/fp_poly.hpp"

#include <stdexcept>

namespace ivpoly::fp {

Elem add(Elem a, Elem b, Elem p) {
    Elem s = a + b;
    return s >= p ? s - p : s;
}

Elem sub(Elem a, Elem b, Elem p) { return a >= b ? a - b : a + p - b; }

Elem mul(Elem a, Elem b, Elem p) {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
}

Elem inv(Elem a, Elem p) {
    // extended Euclid; p prime, a != 0
    long long t = 0, new_t = 1;
    long long r = static_cast<long long>(p), new_r = static_cast<long long>(a % p);
    while (new_r != 0) {
        long long q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::domain_error("fp::inv: argument not invertible");
    long long lt = t % static_cast<long long>(p);
    if (lt < 0) lt += static_cast<long long>(p);
    return static_cast<Elem>(lt);
}

void normalize(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly reduce(const std::vector<Int>& coeffs, Elem p) {
    FpPoly out(coeffs.size());
    Int modulus(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Int r = coeffs[i] % modulus;
        if (r < 0) r += modulus;
        out[i] = r.get_ui();
    }
    normalize(out);
    return out;
}

FpPoly add(const FpPoly& a, const FpPoly& b, Elem p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = add(out[i], b[i], p);
    normalize(out);
    return out;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, Elem p) {
    FpPoly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub(out[i], b[i], p);
    normalize(out);
    return out;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, Elem p) {
    if (a.empty() || b.empty()) return {};
    FpPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = add(out[i + j], mul(a[i], b[j], p), p);
        }
    }
    normalize(out);
    return out;
}

FpDivRem divrem(const FpPoly& f, const FpPoly& g, Elem p) {
    if (g.empty()) throw std::domain_error("fp division by zero");
    if (f.size() < g.size()) return {{}, f};
    FpPoly rem = f;
    FpPoly quot(f.size() - g.size() + 1, 0);
    Elem lead_inv = inv(g.back(), p);
    for (int top = static_cast<int>(rem.size()) - 1;
         top >= static_cast<int>(g.size()) - 1; --top) {
        Elem t = mul(rem[top], lead_inv, p);
        if (t != 0) {
            std::size_t shift = top - (g.size() - 1);
            quot[shift] = t;
            for (std::size_t j = 0; j < g.size(); ++j) {
                rem[shift + j] = sub(rem[shift + j], mul(t, g[j], p), p);
            }
        }
    }
    normalize(rem);
    normalize(quot);
    return {quot, rem};
}

FpPoly make_monic(const FpPoly& f, Elem p) {
    if (f.empty() || f.back() == 1) return f;
    Elem s = inv(f.back(), p);
    FpPoly out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = mul(f[i], s, p);
    return out;
}

FpPoly gcd(const FpPoly& a, const FpPoly& b, Elem p) {
    FpPoly x = a, y = b;
    while (!y.empty()) {
        FpPoly r = divrem(x, y, p).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return make_monic(x, p);
}

FpPoly derivative(const FpPoly& f, Elem p) {
    if (f.size() <= 1) return {};
    FpPoly out(f.size() - 1);
    for (std::size_t i = 1; i < f.size(); ++i) {
        out[i - 1] = mul(f[i], static_cast<Elem>(i % p), p);
    }
    normalize(out);
    return out;
}

FpPoly powmod(const FpPoly& base, unsigned long long e, const FpPoly& f, Elem p) {
    FpPoly result{1};
    FpPoly b = divrem(base, f, p).remainder;
    while (e > 0) {
        if (e & 1ull) result = divrem(mul(result, b, p), f, p).remainder;
        b = divrem(mul(b, b, p), f, p).remainder;
        e >>= 1ull;
    }
    return result;
}

FpPoly pth_root(const FpPoly& f, Elem p) {
    FpPoly out((f.size() + p - 1) / p);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("fp::pth_root: not a p-th power");
        out[i / p] = f[i]; // Frobenius fixes the prime field
    }
    normalize(out);
    return out;
}

std::map<int, FpPoly> squarefree_decomposition(const FpPoly& f, Elem p) {
    if (f.empty()) throw std::domain_error("squarefree decomposition of zero");
    std::map<int, FpPoly> out;
    auto accumulate = [&out, p](const FpPoly& fac, int exp) {
        if (degree(fac) < 1) return;
        auto [it, inserted] = out.emplace(exp, fac);
        if (!inserted) it->second = mul(it->second, fac, p);
    };

    // Standard finite-field squarefree factorization; the p-th-power part is
    // peeled with pth_root and recursed with scaled exponents.
    auto run = [&](auto&& self, FpPoly g, int exp_scale) -> void {
        g = make_monic(g, p);
        if (degree(g) < 1) return;
        FpPoly deriv = derivative(g, p);
        if (deriv.empty()) {
            self(self, pth_root(g, p), exp_scale * static_cast<int>(p));
            return;
        }
        FpPoly c = gcd(g, deriv, p);
        FpPoly w = divrem(g, c, p).quotient;
        int i = 1;
        while (degree(w) >= 1) {
            FpPoly y = gcd(w, c, p);
            FpPoly fac = divrem(w, y, p).quotient;
            accumulate(fac, i * exp_scale);
            w = std::move(y);
            c = divrem(c, w, p).quotient;
            ++i;
        }
        if (degree(c) >= 1) {
            self(self, pth_root(c, p), exp_scale * static_cast<int>(p));
        }
    };
    run(run, f, 1);

    // reconstruction guard
    FpPoly check{1};
    for (const auto& [exp, fac] : out) {
        for (int i = 0; i < exp; ++i) check = mul(check, fac, p);
    }
    if (check != make_monic(f, p)) {
        throw std::logic_error("fp::squarefree_decomposition: reconstruction mismatch");
    }
    return out;
}

FpPoly radical(const FpPoly& f, Elem p) {
    FpPoly rad{1};
    for (const auto& [exp, fac] : squarefree_decomposition(f, p)) {
        rad = mul(rad, fac, p);
    }
    return rad;
}

std::vector<int> irreducible_factor_degrees(const FpPoly& f, Elem p) {
    FpPoly g = make_monic(f, p);
    if (degree(g) < 1) return {};
    std::vector<int> degrees;
    FpPoly x{0, 1};
    FpPoly h = divrem(x, g, p).remainder;
    int d = 0;
    while (degree(g) >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, static_cast<unsigned long long>(p), g, p);
        FpPoly u = gcd(g, sub(h, x, p), p);
        if (degree(u) >= 1) {
            for (int i = 0; i < degree(u) / d; ++i) degrees.push_back(d);
            g = divrem(g, u, p).quotient;
            h = divrem(h, g, p).remainder;
        }
    }
    if (degree(g) >= 1) degrees.push_back(degree(g));
    return degrees;
}

} // namespace ivpoly::fp
