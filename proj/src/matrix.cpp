#include "ivpoly/matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace ivpoly {

MatQ::MatQ(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {
    if (rows == 0 || cols == 0) {
        throw std::domain_error("matrix dimensions must be positive");
    }
}

MatQ MatQ::identity(std::size_t n) {
    MatQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool MatQ::is_integral() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Rat& c) { return is_integer(c); });
}

MatQ operator+(const MatQ& a, const MatQ& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
        throw std::domain_error("matrix addition: shape mismatch");
    }
    MatQ out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = a.entries_[i] + b.entries_[i];
    }
    return out;
}

MatQ operator*(const MatQ& a, const MatQ& b) {
    if (a.cols_ != b.rows_) {
        throw std::domain_error("matrix multiplication: shape mismatch");
    }
    MatQ out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rat& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

MatQ operator*(const Rat& s, const MatQ& a) {
    MatQ out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i) {
        out.entries_[i] = s * a.entries_[i];
    }
    return out;
}

bool operator==(const MatQ& a, const MatQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

MatQ companion_matrix(const MonicPolyZ& p) {
    const std::size_t n = static_cast<std::size_t>(p.degree());
    MatQ c(n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        c.at(i + 1, i) = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        c.at(i, n - 1) = Rat(-p.coeff(i));
    }
    return c;
}

namespace {

// Fraction-free (Bareiss) determinant over any integral domain with exact
// division. Mutates its argument.
template <typename Elem, typename IsZero, typename Mul, typename Sub, typename ExactDiv>
Elem bareiss_det(std::vector<std::vector<Elem>>& a, Elem one, IsZero is_zero, Mul mul,
                 Sub sub, ExactDiv exact, const Elem& zero) {
    const std::size_t n = a.size();
    Elem prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a[k][k])) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && is_zero(a[swap_row][k])) ++swap_row;
            if (swap_row == n) return zero;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = exact(sub(mul(a[k][k], a[i][j]), mul(a[i][k], a[k][j])), prev);
            }
            a[i][k] = zero;
        }
        prev = a[k][k];
    }
    Elem result = a[n - 1][n - 1];
    if (sign < 0) result = sub(zero, result);
    return result;
}

Int det_int(std::vector<std::vector<Int>> a) {
    return bareiss_det<Int>(
        a, Int(1), [](const Int& x) { return x == 0; },
        [](const Int& x, const Int& y) { return Int(x * y); },
        [](const Int& x, const Int& y) { return Int(x - y); },
        [](const Int& x, const Int& y) {
            Int q;
            mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            return q;
        },
        Int(0));
}

PolyQ det_poly(std::vector<std::vector<PolyQ>> a) {
    return bareiss_det<PolyQ>(
        a, PolyQ::constant(Rat(1)), [](const PolyQ& x) { return x.is_zero(); },
        [](const PolyQ& x, const PolyQ& y) { return x * y; },
        [](const PolyQ& x, const PolyQ& y) { return x - y; },
        [](const PolyQ& x, const PolyQ& y) { return exact_div(x, y); }, PolyQ());
}

// Clears denominators row by row; returns the integer matrix and the product
// of the scaling factors.
std::pair<std::vector<std::vector<Int>>, Int> clear_denominators(const MatQ& m) {
    std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
    Int scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Int row_lcm = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            row_lcm = lcm(row_lcm, Int(m.at(i, j).get_den()));
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rat& q = m.at(i, j);
            a[i][j] = Int(q.get_num()) * (row_lcm / Int(q.get_den()));
        }
        scale *= row_lcm;
    }
    return {std::move(a), std::move(scale)};
}

} // namespace

Rat det(const MatQ& m) {
    if (!m.is_square()) {
        throw std::domain_error("determinant of a non-square matrix");
    }
    auto [a, scale] = clear_denominators(m);
    return make_rat(det_int(std::move(a)), scale);
}

PolyQ charpoly(const MatQ& m) {
    if (!m.is_square()) {
        throw std::domain_error("charpoly of a non-square matrix");
    }
    const std::size_t n = m.rows();
    std::vector<std::vector<PolyQ>> a(n, std::vector<PolyQ>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a[i][j] = (i == j) ? PolyQ::variable() - PolyQ::constant(m.at(i, j))
                               : -PolyQ::constant(m.at(i, j));
        }
    }
    return det_poly(std::move(a));
}

MatQ poly_of_matrix(const PolyQ& f, const MatQ& m) {
    if (!m.is_square()) {
        throw std::domain_error("polynomial of a non-square matrix");
    }
    const std::size_t n = m.rows();
    MatQ acc(n, n);
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
        acc = acc * m;
        for (std::size_t i = 0; i < n; ++i) acc.at(i, i) += *it;
    }
    return acc;
}

Rat resultant(const PolyQ& f, const PolyQ& g) {
    if (f.is_zero() || g.is_zero()) {
        throw std::domain_error("resultant of the zero polynomial");
    }
    const int m = f.degree();
    const int n = g.degree();
    if (m == 0 && n == 0) return Rat(1);
    if (m == 0) {
        Rat r(1);
        for (int i = 0; i < n; ++i) r *= f.leading();
        return r;
    }
    if (n == 0) {
        Rat r(1);
        for (int i = 0; i < m; ++i) r *= g.leading();
        return r;
    }
    // Sylvester matrix with the g block first: the determinant is
    // lc(g)^m * prod f(beta) over the roots beta of g.
    const std::size_t size = static_cast<std::size_t>(m + n);
    MatQ s(size, size);
    for (int row = 0; row < m; ++row) {
        for (int k = 0; k <= n; ++k) {
            s.at(row, row + k) = g.coeff(static_cast<std::size_t>(n - k));
        }
    }
    for (int row = 0; row < n; ++row) {
        for (int k = 0; k <= m; ++k) {
            s.at(static_cast<std::size_t>(m + row), row + k) =
                f.coeff(static_cast<std::size_t>(m - k));
        }
    }
    return det(s);
}

Rat discriminant(const MonicPolyZ& p) {
    const int n = p.degree();
    PolyQ deriv = p.to_poly().derivative();
    Rat res = resultant(p.to_poly(), deriv);
    // (-1)^{n(n-1)/2}
    if (((static_cast<long>(n) * (n - 1)) / 2) % 2 != 0) res = -res;
    return res;
}

} // namespace ivpoly
