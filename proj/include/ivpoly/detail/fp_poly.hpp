#ifndef IVPOLY_DETAIL_FP_POLY_HPP
#define IVPOLY_DETAIL_FP_POLY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "ivpoly/rational.hpp"

// Small prime-field polynomial layer used inside factoring and maximality
// testing. Not part of the public surface.
namespace ivpoly::fp {

using Elem = std::uint64_t;

// Coefficients ascending, normalized (no trailing zeros). The modulus is
// passed alongside; all routines assume a prime modulus that fits in 32 bits
// so products fit in 64x64 -> 128.
using FpPoly = std::vector<Elem>;

Elem add(Elem a, Elem b, Elem p);
Elem sub(Elem a, Elem b, Elem p);
Elem mul(Elem a, Elem b, Elem p);
Elem inv(Elem a, Elem p);

void normalize(FpPoly& f);
int degree(const FpPoly& f); // -1 for zero, internal use only

FpPoly reduce(const std::vector<Int>& coeffs, Elem p);

FpPoly add(const FpPoly& a, const FpPoly& b, Elem p);
FpPoly sub(const FpPoly& a, const FpPoly& b, Elem p);
FpPoly mul(const FpPoly& a, const FpPoly& b, Elem p);

struct FpDivRem {
    FpPoly quotient;
    FpPoly remainder;
};
FpDivRem divrem(const FpPoly& f, const FpPoly& g, Elem p);

FpPoly make_monic(const FpPoly& f, Elem p);
FpPoly gcd(const FpPoly& a, const FpPoly& b, Elem p); // monic (or zero)
FpPoly derivative(const FpPoly& f, Elem p);

// base^e mod f
FpPoly powmod(const FpPoly& base, unsigned long long e, const FpPoly& f, Elem p);

// For f with f' = 0 (all exponents divisible by p): the unique g with
// g^p = f, i.e. coefficient map i*p -> i (Frobenius fixes the prime field).
FpPoly pth_root(const FpPoly& f, Elem p);

// Squarefree decomposition of a monic polynomial: exponent -> monic
// squarefree factor, pairwise coprime, product over (factor^exponent) = f.
std::map<int, FpPoly> squarefree_decomposition(const FpPoly& f, Elem p);

// Product of the distinct monic irreducible factors of monic f.
FpPoly radical(const FpPoly& f, Elem p);

// Degrees (with repetition, ascending) of the irreducible factors of a
// monic squarefree polynomial, by distinct-degree factorization.
std::vector<int> irreducible_factor_degrees(const FpPoly& f, Elem p);

} // namespace ivpoly::fp

#endif
