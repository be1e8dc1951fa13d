#ifndef IVPOLY_PULLBACK_HPP
#define IVPOLY_PULLBACK_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

// Membership in Z[X] + p*Q[X]: true iff the remainder of f mod p has
// integer coefficients.
bool in_pullback(const PolyQ& f, const MonicPolyZ& p);

// Containment of pullback rings: the ring of p is contained in the ring of
// q iff q divides p.
bool pullback_contains(const MonicPolyZ& p, const MonicPolyZ& q);

// Membership in the intersection of the pullback rings of qs.
// Throws std::domain_error on an empty list.
bool in_intersection(const PolyQ& f, std::span<const MonicPolyZ> qs);

struct CoprimalityReport {
    bool verdict;
    // First failing pair (indices into the input) and its resultant, present
    // iff verdict is false.
    std::optional<std::size_t> first_index;
    std::optional<std::size_t> second_index;
    std::optional<Rat> failing_resultant;
};

// Pairwise coprimality over Z: every |Res(q_i, q_j)| must be 1. A pair with
// Res = 0 (common factor over Q) is rejected with std::domain_error rather
// than reported as a verdict.
CoprimalityReport pairwise_coprime_over_Z(std::span<const MonicPolyZ> qs);

// True iff the pullback ring of prod q_i equals the intersection of the
// individual pullback rings, i.e. iff the q_i are pairwise coprime over Z.
bool equals_product_pullback(std::span<const MonicPolyZ> qs);

// Independent membership oracle: evaluate f at the companion matrix of p and
// test that every entry is an integer. Coincides with in_pullback; kept as a
// cross-check only.
bool companion_oracle_member(const PolyQ& f, const MonicPolyZ& p);

} // namespace ivpoly

#endif
