#include "ivpoly/bhargava.hpp"

#include <functional>
#include <stdexcept>

#include "ivpoly/closure.hpp"
#include "ivpoly/divided_diff.hpp"
#include "ivpoly/pullback.hpp"
#include "ivpoly/root_multiset.hpp"

namespace ivpoly {

namespace {

// Non-decreasing tuples of the given size over the sorted values, in
// lexicographic order.
void for_each_multiset(const std::vector<Int>& values, int size,
                       const std::function<void(const std::vector<Int>&)>& visit) {
    std::vector<Int> tuple;
    auto recurse = [&](auto&& self, std::size_t start, int remaining) -> void {
        if (remaining == 0) {
            visit(tuple);
            return;
        }
        for (std::size_t i = start; i < values.size(); ++i) {
            tuple.push_back(values[i]);
            self(self, i, remaining - 1);
            tuple.pop_back();
        }
    };
    recurse(recurse, 0, size);
}

} // namespace

std::vector<MonicPolyZ> enumerate_split_monic(const std::set<Int>& omega, int degree) {
    if (omega.empty()) {
        throw std::domain_error("enumerate_split_monic: empty root set");
    }
    if (degree < 1) {
        throw std::domain_error("enumerate_split_monic: degree must be positive");
    }
    std::vector<Int> values(omega.begin(), omega.end());
    std::vector<MonicPolyZ> out;
    for_each_multiset(values, degree, [&](const std::vector<Int>& roots) {
        PolyQ prod = PolyQ::constant(Rat(1));
        for (const Int& a : roots) {
            prod = prod * (PolyQ::variable() - PolyQ::constant(Rat(a)));
        }
        out.push_back(MonicPolyZ::from_poly(prod));
    });
    return out;
}

bool bhargava_member_direct(const PolyQ& f, const std::set<Int>& omega, int order) {
    if (omega.empty()) {
        throw std::domain_error("bhargava membership: empty evaluation set");
    }
    if (order < 0) {
        throw std::domain_error("bhargava membership: order must be >= 0");
    }
    std::vector<Int> values(omega.begin(), omega.end());
    bool ok = true;
    for (int k = 0; k <= order && ok; ++k) {
        for_each_multiset(values, k + 1, [&](const std::vector<Int>& tuple) {
            if (!ok) return;
            RootMultiset m = RootMultiset::from_integers(tuple);
            if (!is_integer(divided_difference(f, m))) ok = false;
        });
    }
    return ok;
}

BhargavaPullbackResult bhargava_member_pullback(const PolyQ& f, const std::set<Int>& omega,
                                                int order) {
    if (order < 0) {
        throw std::domain_error("bhargava membership: order must be >= 0");
    }
    for (const MonicPolyZ& q : enumerate_split_monic(omega, order + 1)) {
        if (!in_pullback(f, q)) {
            return {false, q};
        }
    }
    return {true, std::nullopt};
}

MonicPolyZ synthesize_integral_equation(const PolyQ& f, const std::set<Int>& omega, int order) {
    if (omega.empty()) {
        throw std::domain_error("synthesize_integral_equation: empty evaluation set");
    }
    if (order < 0) {
        throw std::domain_error("synthesize_integral_equation: order must be >= 0");
    }
    for (const Int& a : omega) {
        if (!is_integer(f.eval(Rat(a)))) {
            throw std::domain_error("polynomial is not integer-valued on the set");
        }
    }

    PolyQ q_poly = PolyQ::constant(Rat(1));
    for (const Int& a : omega) {
        PolyQ power = (PolyQ::variable() - PolyQ::constant(Rat(a))).pow(
            static_cast<unsigned>(order + 1));
        q_poly = q_poly * image_charpoly(f, MonicPolyZ::from_poly(power));
    }
    MonicPolyZ q = MonicPolyZ::from_poly(q_poly);

    PolyQ composed = q_poly.compose(f);
    for (const MonicPolyZ& p : enumerate_split_monic(omega, order + 1)) {
        if (!divrem(composed, p).remainder.is_zero()) {
            throw std::logic_error("integral equation fails the divisibility check");
        }
    }
    return q;
}

} // namespace ivpoly
