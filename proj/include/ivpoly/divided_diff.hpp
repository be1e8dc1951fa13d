#ifndef IVPOLY_DIVIDED_DIFF_HPP
#define IVPOLY_DIVIDED_DIFF_HPP

#include <span>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"
#include "ivpoly/root_multiset.hpp"

namespace ivpoly {

// k-th divided difference of f at k+1 points, exact. Repeated points take
// the confluent value (the derivative-based limit, computed by expanding f
// around the repeated point). Symmetric in the points.
// Throws std::domain_error on an empty point list.
Rat divided_difference(const PolyQ& f, std::span<const Rat> points);

// Divided difference at any ordering of the multiset; well defined by
// symmetry.
Rat divided_difference(const PolyQ& f, const RootMultiset& points);

// Coefficients c_k = divided difference of f at nodes[0..k], one per node,
// so that f = sum c_k * prod_{i<k} (X - nodes[i]).
// Requires nodes.size() >= deg(f) + 1 (throws std::domain_error otherwise).
std::vector<Rat> newton_expand(const PolyQ& f, std::span<const Rat> nodes);

// sum coeffs[k] * prod_{i<k} (X - nodes[i]); exact inverse of newton_expand.
// Requires nodes.size() + 1 >= coeffs.size().
PolyQ newton_reconstruct(std::span<const Rat> coeffs, std::span<const Rat> nodes);

// Verifies the Leibniz rule for divided differences of a product,
//   Phi^k(f*g)(x_0..x_k) = sum_i Phi^i(f)(x_0..x_i) * Phi^{k-i}(g)(x_i..x_k),
// on the given tuple. Always true for polynomials; exposed as a self-test.
bool leibniz_check(const PolyQ& f, const PolyQ& g, std::span<const Rat> points);

// Membership in the pullback ring of a split p via root data: true iff every
// divided difference of f over a sub-multiset of the roots is an integer.
// roots must be exactly the root multiset of p (prod (X-a)^mult = p), else
// std::domain_error. Agrees with in_pullback.
bool split_membership(const PolyQ& f, const MonicPolyZ& p, const RootMultiset& roots);

} // namespace ivpoly

#endif
