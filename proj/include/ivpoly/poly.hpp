#ifndef IVPOLY_POLY_HPP
#define IVPOLY_POLY_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ivpoly/rational.hpp"

namespace ivpoly {

// Dense univariate polynomial over the rationals. Coefficients are stored
// ascending (index = degree of the term). The zero polynomial is the empty
// coefficient sequence; for nonzero polynomials the trailing coefficient is
// nonzero. All values are immutable once built and all operations are pure.
class PolyQ {
public:
    PolyQ() = default;
    explicit PolyQ(std::vector<Rat> coeffs);

    static PolyQ constant(const Rat& c);
    static PolyQ monomial(const Rat& c, std::size_t degree);
    static PolyQ variable();

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of a nonzero polynomial. The zero polynomial has no degree;
    // calling degree() on it throws rather than returning a -1 that could
    // leak into arithmetic.
    int degree() const;

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    // Coefficient of X^i, zero beyond the stored length.
    Rat coeff(std::size_t i) const;

    const Rat& leading() const;

    // True iff every coefficient is an integer.
    bool is_integral() const;

    Rat eval(const Rat& point) const;
    PolyQ compose(const PolyQ& inner) const;
    PolyQ derivative() const;
    PolyQ pow(unsigned exponent) const;

    PolyQ operator-() const;

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b);
    friend PolyQ operator*(const Rat& s, const PolyQ& a);
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();

    std::vector<Rat> coeffs_;
};

// Monic non-constant polynomial with integer coefficients: the divisor
// defining a pullback ring. Invariants (leading coefficient 1, degree >= 1)
// are validated on construction.
class MonicPolyZ {
public:
    explicit MonicPolyZ(std::vector<Int> coeffs);

    // Conversion from a rational polynomial; throws std::domain_error if the
    // input is not monic with integer coefficients of degree >= 1.
    static MonicPolyZ from_poly(const PolyQ& f);
    static std::optional<MonicPolyZ> try_from_poly(const PolyQ& f);

    // X - a
    static MonicPolyZ linear_root(const Int& a);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    Int coeff(std::size_t i) const;

    PolyQ to_poly() const;

    friend MonicPolyZ operator*(const MonicPolyZ& a, const MonicPolyZ& b);
    friend bool operator==(const MonicPolyZ& a, const MonicPolyZ& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<Int> coeffs_;
};

struct DivRem {
    PolyQ quotient;
    PolyQ remainder;
};

// Euclidean division in Q[X]; divisor must be nonzero. Exact:
// f = quotient * g + remainder with remainder zero or deg < deg g.
DivRem divrem(const PolyQ& f, const PolyQ& g);
DivRem divrem(const PolyQ& f, const MonicPolyZ& p);

// Quotient of an exact division; throws std::logic_error when the remainder
// is nonzero (used where divisibility is guaranteed by construction).
PolyQ exact_div(const PolyQ& f, const PolyQ& g);

// Monic gcd over Q, computed by the primitive-part Euclidean remainder
// sequence over Z to keep intermediate coefficients small. Throws
// std::domain_error when both inputs are zero.
PolyQ gcd(const PolyQ& f, const PolyQ& g);

struct SquarefreeResult {
    MonicPolyZ part;
    bool is_squarefree;
};

// p / gcd(p, p'), normalized monic; the flag is true iff gcd(p, p') = 1.
SquarefreeResult squarefree_part(const MonicPolyZ& p);

} // namespace ivpoly

#endif
