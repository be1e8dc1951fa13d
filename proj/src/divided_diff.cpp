#include "ivpoly/divided_diff.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ivpoly/pullback.hpp"

namespace ivpoly {

namespace {

// Divided-difference table over points sorted so equal values are adjacent;
// the confluent entries are Taylor coefficients of f at the repeated value.
Rat divided_difference_sorted(const PolyQ& f, std::vector<Rat> pts) {
    const std::size_t n = pts.size();

    // Taylor coefficients (coefficients of f(X + a)) per distinct repeated value.
    std::map<Rat, std::vector<Rat>> shifted;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (pts[i] == pts[i + 1] && !shifted.count(pts[i])) {
            PolyQ sh = f.compose(PolyQ::variable() + PolyQ::constant(pts[i]));
            shifted.emplace(pts[i], sh.coeffs());
        }
    }
    auto taylor = [&](const Rat& a, std::size_t k) -> Rat {
        const auto& c = shifted.at(a);
        return k < c.size() ? c[k] : Rat(0);
    };

    std::vector<Rat> row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = f.eval(pts[i]);
    for (std::size_t k = 1; k < n; ++k) {
        // row[i] becomes the order-k difference over pts[i..i+k]
        for (std::size_t i = 0; i + k < n; ++i) {
            if (pts[i] == pts[i + k]) {
                row[i] = taylor(pts[i], k);
            } else {
                row[i] = (row[i + 1] - row[i]) / (pts[i + k] - pts[i]);
            }
        }
        row.resize(n - k);
    }
    return row[0];
}

} // namespace

Rat divided_difference(const PolyQ& f, std::span<const Rat> points) {
    if (points.empty()) {
        throw std::domain_error("divided difference needs at least one point");
    }
    std::vector<Rat> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end());
    return divided_difference_sorted(f, std::move(pts));
}

Rat divided_difference(const PolyQ& f, const RootMultiset& points) {
    if (points.empty()) {
        throw std::domain_error("divided difference needs at least one point");
    }
    return divided_difference_sorted(f, points.sorted_values());
}

std::vector<Rat> newton_expand(const PolyQ& f, std::span<const Rat> nodes) {
    const std::size_t needed = f.is_zero() ? 1 : static_cast<std::size_t>(f.degree()) + 1;
    if (nodes.size() < needed) {
        throw std::domain_error("newton_expand: not enough nodes for the degree");
    }
    std::vector<Rat> coeffs;
    coeffs.reserve(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        coeffs.push_back(divided_difference(f, nodes.subspan(0, k + 1)));
    }
    return coeffs;
}

PolyQ newton_reconstruct(std::span<const Rat> coeffs, std::span<const Rat> nodes) {
    if (!coeffs.empty() && nodes.size() + 1 < coeffs.size()) {
        throw std::domain_error("newton_reconstruct: node list too short");
    }
    PolyQ result;
    PolyQ basis = PolyQ::constant(Rat(1));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        result = result + coeffs[k] * basis;
        if (k < nodes.size()) {
            basis = basis * (PolyQ::variable() - PolyQ::constant(nodes[k]));
        }
    }
    return result;
}

bool leibniz_check(const PolyQ& f, const PolyQ& g, std::span<const Rat> points) {
    if (points.empty()) {
        throw std::domain_error("leibniz_check needs at least one point");
    }
    const std::size_t k = points.size() - 1;
    Rat left = divided_difference(f * g, points);
    Rat right(0);
    for (std::size_t i = 0; i <= k; ++i) {
        Rat a = divided_difference(f, points.subspan(0, i + 1));
        Rat b = divided_difference(g, points.subspan(i, k - i + 1));
        right += a * b;
    }
    return left == right;
}

bool split_membership(const PolyQ& f, const MonicPolyZ& p, const RootMultiset& roots) {
    if (roots.product_of_linear_factors() != p.to_poly()) {
        throw std::domain_error("root multiset does not match the polynomial");
    }
    const std::size_t n = static_cast<std::size_t>(p.degree());
    for (std::size_t size = 1; size <= n; ++size) {
        for (const RootMultiset& sub : roots.submultisets_of_size(size)) {
            if (!is_integer(divided_difference(f, sub))) return false;
        }
    }
    return true;
}

} // namespace ivpoly
