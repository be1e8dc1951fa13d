#include "ivpoly/pullback.hpp"

#include <cmath>
#include <stdexcept>

#include "ivpoly/matrix.hpp"

namespace ivpoly {

bool in_pullback(const PolyQ& f, const MonicPolyZ& p) {
    return divrem(f, p).remainder.is_integral();
}

bool pullback_contains(const MonicPolyZ& p, const MonicPolyZ& q) {
    return divrem(p.to_poly(), q).remainder.is_zero();
}

bool in_intersection(const PolyQ& f, std::span<const MonicPolyZ> qs) {
    if (qs.empty()) {
        throw std::domain_error("intersection over an empty family");
    }
    for (const MonicPolyZ& q : qs) {
        if (!in_pullback(f, q)) return false;
    }
    return true;
}

CoprimalityReport pairwise_coprime_over_Z(std::span<const MonicPolyZ> qs) {
    for (std::size_t i = 0; i < qs.size(); ++i) {
        for (std::size_t j = i + 1; j < qs.size(); ++j) {
            Rat res = resultant(qs[i].to_poly(), qs[j].to_poly());
            if (res == 0) {
                throw std::domain_error(
                    "inputs share a factor over Q (resultant 0); not coprime over the fraction field");
            }
            if (res != 1 && res != -1) {
                return {false, i, j, res};
            }
        }
    }
    return {true, std::nullopt, std::nullopt, std::nullopt};
}

bool equals_product_pullback(std::span<const MonicPolyZ> qs) {
    return pairwise_coprime_over_Z(qs).verdict;
}

bool companion_oracle_member(const PolyQ& f, const MonicPolyZ& p) {
    return poly_of_matrix(f, companion_matrix(p)).is_integral();
}

} // namespace ivpoly
