#ifndef IVPOLY_CLOSURE_HPP
#define IVPOLY_CLOSURE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

// The monic polynomial whose roots are the values of f on the roots of p:
// the characteristic polynomial of f evaluated at the companion matrix of p.
// Always monic of degree deg(p).
PolyQ image_charpoly(const PolyQ& f, const MonicPolyZ& p);

struct IntegralValueResult {
    bool member;       // f maps every root of p to an algebraic integer
    PolyQ certificate; // the image charpoly; integer coefficients iff member
};

// Membership in the ring of polynomials integral-valued on the roots of p
// (the integral closure of the pullback ring). Decided by integrality of the
// image charpoly; no numeric root finding anywhere.
IntegralValueResult is_integral_valued(const PolyQ& f, const MonicPolyZ& p);

// Checks that p divides P(f(X)) where P is the image charpoly — the monic
// integral equation for f over the pullback ring. Holds for every f, p;
// exposed as a self-test.
bool divisibility_certificate(const PolyQ& f, const MonicPolyZ& p);

struct IrreducibilityCertificate {
    enum class Kind {
        linear,               // degree 1
        irreducible_mod_prime, // irreducible modulo `prime`
        degree_patterns,      // factor degrees mod `primes_used` rule out all proper divisors
        kronecker_exhausted,  // interpolation search found no proper factor
    };
    Kind kind;
    unsigned long prime = 0;
    std::vector<unsigned long> primes_used;

    std::string describe() const;
};

struct FactorUnit {
    MonicPolyZ factor;
    int exponent;
    IrreducibilityCertificate certificate;
};

struct FactorOptions {
    int max_degree = 8;
    // Trial-division bound for integer factorizations inside the search.
    unsigned long trial_division_bound = 1000000;
    // Cap on divisor-tuple combinations per Kronecker degree.
    unsigned long long kronecker_budget = 5000000;
};

// Factorization of p into distinct monic irreducible integer polynomials
// with exponents, each carrying an irreducibility certificate. Inputs above
// the effort bounds raise UnsupportedInputError, never a wrong answer.
std::vector<FactorUnit> factor_monic(const MonicPolyZ& p, const FactorOptions& opts = {});

// Dedekind index criterion at a prime: true iff Z[X]/(q) is maximal at it.
// q must be irreducible; throws std::domain_error when `prime` is not prime.
bool dedekind_maximal_at(const MonicPolyZ& q, const Int& prime);

struct MaximalityResult {
    bool verdict;
    std::optional<Int> failing_prime;
};

// Whether Z[X]/(q) is the full ring of integers of its field: Dedekind at
// every prime whose square divides the discriminant.
MaximalityResult is_maximal_order(const MonicPolyZ& q, const FactorOptions& opts = {});

struct MaximalityEntry {
    std::size_t factor_index;
    bool maximal;
    std::optional<Int> failing_prime;
};

struct ResultantEntry {
    std::size_t i, j; // factor indices, i < j
    Rat value;
};

// Verdict for integral-closedness of the pullback ring of p, with
// per-condition evidence: squarefreeness, maximality of each factor's order,
// unit resultants for each factor pair.
struct ClosureReport {
    MonicPolyZ input;
    bool squarefree;
    std::vector<FactorUnit> factors;
    std::vector<MaximalityEntry> maximality;
    std::vector<ResultantEntry> resultants;
    bool verdict;
    std::optional<PolyQ> witness; // validated member of the gap, if searched for
};

struct WitnessBounds {
    long coeff_bound = 6;
    long denom_bound = 3;
};

ClosureReport closure_verdict(const MonicPolyZ& p, const FactorOptions& opts = {});

// As above, and when the verdict is false additionally searches the given
// box for a witness (validated before emission).
ClosureReport closure_verdict_with_witness(const MonicPolyZ& p, const WitnessBounds& bounds,
                                           const FactorOptions& opts = {});

// Deterministic search for f = g/m with deg g < deg p, |coeffs of g| <=
// coeff_bound, 2 <= m <= denom_bound, that is integral-valued on the roots
// of p but not in the pullback ring. Enumeration order: m ascending, then
// coefficient tuples leading-coefficient-first, each coordinate scanned
// 0, 1, -1, 2, -2, ... Returns the first hit; absence is not a closedness
// proof.
std::optional<PolyQ> find_closure_witness(const MonicPolyZ& p, long coeff_bound,
                                          long denom_bound);

} // namespace ivpoly

#endif
