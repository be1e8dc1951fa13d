#ifndef IVPOLY_BHARGAVA_HPP
#define IVPOLY_BHARGAVA_HPP

#include <optional>
#include <set>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

// All monic degree-n integer polynomials whose roots (with multiplicity) lie
// in omega: one per size-n multiset, in lexicographic order of the
// non-decreasing root tuples. Count is C(|omega|+n-1, n).
// Throws std::domain_error on empty omega or n < 1.
std::vector<MonicPolyZ> enumerate_split_monic(const std::set<Int>& omega, int degree);

// Membership in the ring of polynomials whose divided differences up to the
// given order are integer-valued on omega: checks every multiset of size
// k+1 (k <= order) with elements drawn from omega, repetitions unbounded.
bool bhargava_member_direct(const PolyQ& f, const std::set<Int>& omega, int order);

struct BhargavaPullbackResult {
    bool member;
    // First pullback divisor that rejects f, present iff member is false.
    std::optional<MonicPolyZ> failing;
};

// Same ring decided through the pullback-intersection representation:
// f must lie in the pullback ring of every q of degree order+1 with roots
// in omega. Agrees with the direct route.
BhargavaPullbackResult bhargava_member_pullback(const PolyQ& f, const std::set<Int>& omega,
                                                int order);

// For f integer-valued on omega, the monic integer polynomial
//   Q = prod over a in omega of (X - f(a))^{order+1}
// (a product of image charpolys), such that Q(f) is divisible by every
// degree-(order+1) split polynomial with roots in omega. The divisibility is
// machine-verified before returning. Throws std::domain_error when f is not
// integer-valued on omega.
MonicPolyZ synthesize_integral_equation(const PolyQ& f, const std::set<Int>& omega, int order);

} // namespace ivpoly

#endif
