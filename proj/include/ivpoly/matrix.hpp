#ifndef IVPOLY_MATRIX_HPP
#define IVPOLY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "ivpoly/poly.hpp"
#include "ivpoly/rational.hpp"

namespace ivpoly {

// Exact rational matrix, row-major.
class MatQ {
public:
    MatQ(std::size_t rows, std::size_t cols);

    static MatQ identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_integral() const;

    friend MatQ operator+(const MatQ& a, const MatQ& b);
    friend MatQ operator*(const MatQ& a, const MatQ& b);
    friend MatQ operator*(const Rat& s, const MatQ& a);
    friend bool operator==(const MatQ& a, const MatQ& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

// Frobenius companion matrix: subdiagonal ones, last column the negated
// non-leading coefficients; its characteristic polynomial is p.
MatQ companion_matrix(const MonicPolyZ& p);

// det(X*I - M), monic of degree n, by fraction-free (Bareiss) elimination
// over Q[X]. Throws std::domain_error on non-square input.
PolyQ charpoly(const MatQ& m);

// Horner evaluation of f at a square matrix.
MatQ poly_of_matrix(const PolyQ& f, const MatQ& m);

// Exact determinant (row denominators cleared, Bareiss over Z).
Rat det(const MatQ& m);

// Sylvester resultant, oriented so that
//   resultant(f, g) = lc(g)^{deg f} * prod f(beta) over the roots beta of g.
// Throws std::domain_error when either input is zero.
Rat resultant(const PolyQ& f, const PolyQ& g);

// (-1)^{n(n-1)/2} * resultant(p, p') for monic p; always an integer.
Rat discriminant(const MonicPolyZ& p);

} // namespace ivpoly

#endif
