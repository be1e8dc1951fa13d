#include "ivpoly/closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "ivpoly/detail/fp_poly.hpp"
#include "ivpoly/errors.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/pullback.hpp"

namespace ivpoly {

// ------------------------------------------------- integral-value tests ----

PolyQ image_charpoly(const PolyQ& f, const MonicPolyZ& p) {
    return charpoly(poly_of_matrix(f, companion_matrix(p)));
}

IntegralValueResult is_integral_valued(const PolyQ& f, const MonicPolyZ& p) {
    PolyQ cert = image_charpoly(f, p);
    return {cert.is_integral(), cert};
}

bool divisibility_certificate(const PolyQ& f, const MonicPolyZ& p) {
    PolyQ cert = image_charpoly(f, p);
    return divrem(cert.compose(f), p).remainder.is_zero();
}

// -------------------------------------------------------- integer helpers ----

namespace {

bool probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

// Trial division up to the bound; returns prime -> exponent and the
// unfactored cofactor (1 when complete).
std::map<Int, int> trial_factor(Int n, unsigned long bound, Int& cofactor) {
    std::map<Int, int> factors;
    if (n < 0) n = -n;
    for (Int d = 2; d * d <= n && d <= static_cast<long>(bound); ++d) {
        while (n % d == 0) {
            ++factors[d];
            n /= d;
        }
    }
    if (n > 1 && n <= static_cast<long>(bound) * Int(static_cast<long>(bound))) {
        // remaining cofactor below bound^2 must be prime
        ++factors[n];
        n = 1;
    }
    cofactor = n;
    return factors;
}

// Absorbs an unfactored cofactor when it is a probable prime or a perfect
// power of one; returns false otherwise.
bool absorb_cofactor(std::map<Int, int>& factors, const Int& cofactor) {
    if (cofactor <= 1) return true;
    if (probable_prime(cofactor)) {
        ++factors[cofactor];
        return true;
    }
    if (mpz_perfect_power_p(cofactor.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(cofactor.get_mpz_t(), 2); ++k) {
            Int root, rem;
            mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), cofactor.get_mpz_t(), k);
            if (rem == 0 && probable_prime(root)) {
                factors[root] += static_cast<int>(k);
                return true;
            }
        }
    }
    return false;
}

// All positive divisors, smallest first. Throws UnsupportedInputError when
// the factorization is incomplete or the divisor count explodes.
std::vector<Int> positive_divisors(const Int& n, const FactorOptions& opts) {
    Int cofactor;
    std::map<Int, int> factors = trial_factor(n, opts.trial_division_bound, cofactor);
    if (!absorb_cofactor(factors, cofactor)) {
        throw UnsupportedInputError("cannot factor " + to_string(n) +
                                    " within the trial-division bound");
    }
    std::vector<Int> divisors{1};
    for (const auto& [prime, exp] : factors) {
        std::size_t old_size = divisors.size();
        if (old_size * (exp + 1) > 100000) {
            throw UnsupportedInputError("divisor count of " + to_string(n) +
                                        " exceeds the search budget");
        }
        Int power = 1;
        for (int e = 1; e <= exp; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < old_size; ++i) {
                divisors.push_back(divisors[i] * power);
            }
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

// ------------------------------------------------------ factoring pieces ----

const unsigned long kPatternPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                        23, 29, 31, 37, 41, 43, 47, 53};

// Degrees d for which a monic degree-d divisor is not excluded by the factor
// degree patterns modulo the usable primes. Also reports a prime modulo
// which the polynomial stays irreducible, if one is found.
struct PatternScan {
    std::set<int> possible;              // candidate proper divisor degrees
    std::vector<unsigned long> primes_used;
    std::optional<unsigned long> irreducible_mod;
};

PatternScan scan_degree_patterns(const MonicPolyZ& h) {
    const int n = h.degree();
    PatternScan scan;
    for (int d = 1; d < n; ++d) scan.possible.insert(d);

    for (unsigned long ell : kPatternPrimes) {
        fp::FpPoly reduced = fp::reduce(h.coeffs(), ell);
        if (fp::degree(fp::gcd(reduced, fp::derivative(reduced, ell), ell)) != 0) {
            continue; // not squarefree mod ell; degree pattern unusable
        }
        std::vector<int> degrees = fp::irreducible_factor_degrees(reduced, ell);
        if (degrees.size() == 1) {
            scan.irreducible_mod = ell;
            scan.primes_used.push_back(ell);
            scan.possible.clear();
            return scan;
        }
        // subset sums of the factor degrees = degrees of monic divisors mod ell
        std::vector<bool> reachable(static_cast<std::size_t>(n) + 1, false);
        reachable[0] = true;
        for (int d : degrees) {
            for (int s = n; s >= d; --s) {
                if (reachable[s - d]) reachable[s] = true;
            }
        }
        for (auto it = scan.possible.begin(); it != scan.possible.end();) {
            it = reachable[static_cast<std::size_t>(*it)] ? std::next(it)
                                                          : scan.possible.erase(it);
        }
        scan.primes_used.push_back(ell);
        if (scan.primes_used.size() >= 5 || scan.possible.empty()) break;
    }
    return scan;
}

// Lagrange basis through the fixed points, so each divisor tuple is just a
// linear combination.
std::vector<PolyQ> lagrange_basis(const std::vector<Int>& points) {
    const std::size_t n = points.size();
    std::vector<PolyQ> basis;
    basis.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        PolyQ num = PolyQ::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            num = num * (PolyQ::variable() - PolyQ::constant(Rat(points[j])));
            denom *= Rat(points[i] - points[j]);
        }
        basis.push_back((Rat(1) / denom) * num);
    }
    return basis;
}

// Kronecker search for a monic degree-d factor of squarefree monic h with no
// rational roots. Returns the first factor found under a fixed enumeration.
std::optional<MonicPolyZ> kronecker_find_factor(const MonicPolyZ& h, int d,
                                                const FactorOptions& opts) {
    std::vector<Int> points;
    for (long k = 0; static_cast<int>(points.size()) <= d; ++k) {
        points.push_back(k);
        if (static_cast<int>(points.size()) <= d && k > 0) points.push_back(-k);
    }
    points.resize(static_cast<std::size_t>(d) + 1);

    PolyQ hq = h.to_poly();
    std::vector<std::vector<Int>> divisor_lists;
    unsigned long long total = 1;
    for (const Int& t : points) {
        Rat value = hq.eval(Rat(t));
        Int v = value.get_num();
        if (v == 0) {
            throw std::logic_error("kronecker: unexpected rational root");
        }
        std::vector<Int> divs = positive_divisors(abs(v), opts);
        std::vector<Int> signed_divs;
        signed_divs.reserve(divs.size() * 2);
        for (const Int& w : divs) {
            signed_divs.push_back(w);
            signed_divs.push_back(-w);
        }
        total *= signed_divs.size();
        if (total > opts.kronecker_budget) {
            throw UnsupportedInputError("Kronecker divisor combinations exceed the budget");
        }
        divisor_lists.push_back(std::move(signed_divs));
    }

    std::vector<PolyQ> basis = lagrange_basis(points);
    std::vector<std::size_t> index(divisor_lists.size(), 0);
    while (true) {
        PolyQ candidate;
        for (std::size_t i = 0; i < index.size(); ++i) {
            candidate = candidate + Rat(divisor_lists[i][index[i]]) * basis[i];
        }
        if (!candidate.is_zero() && candidate.degree() == d && candidate.leading() == 1 &&
            candidate.is_integral()) {
            if (divrem(hq, candidate).remainder.is_zero()) {
                return MonicPolyZ::from_poly(candidate);
            }
        }
        std::size_t pos = 0;
        while (pos < index.size() && ++index[pos] == divisor_lists[pos].size()) {
            index[pos] = 0;
            ++pos;
        }
        if (pos == index.size()) break;
    }
    return std::nullopt;
}

using CertifiedFactor = std::pair<MonicPolyZ, IrreducibilityCertificate>;

// Factors a squarefree monic polynomial with no rational roots, degree >= 2.
void factor_nonlinear(const MonicPolyZ& h, const FactorOptions& opts,
                      std::vector<CertifiedFactor>& out) {
    const int n = h.degree();
    PatternScan scan = scan_degree_patterns(h);
    if (scan.irreducible_mod) {
        out.push_back({h,
                       {IrreducibilityCertificate::Kind::irreducible_mod_prime,
                        *scan.irreducible_mod,
                        scan.primes_used}});
        return;
    }
    std::vector<int> targets;
    for (int d : scan.possible) {
        if (d >= 2 && 2 * d <= n) targets.push_back(d);
    }
    if (targets.empty()) {
        out.push_back({h,
                       {IrreducibilityCertificate::Kind::degree_patterns, 0,
                        scan.primes_used}});
        return;
    }
    for (int d : targets) {
        if (auto factor = kronecker_find_factor(h, d, opts)) {
            MonicPolyZ rest = MonicPolyZ::from_poly(exact_div(h.to_poly(), factor->to_poly()));
            auto descend = [&](const MonicPolyZ& part) {
                if (part.degree() == 1) {
                    out.push_back({part, {IrreducibilityCertificate::Kind::linear, 0, {}}});
                } else {
                    factor_nonlinear(part, opts, out);
                }
            };
            descend(*factor);
            descend(rest);
            return;
        }
    }
    out.push_back({h,
                   {IrreducibilityCertificate::Kind::kronecker_exhausted, 0,
                    scan.primes_used}});
}

// Distinct irreducible factors (with certificates) of a squarefree monic
// polynomial.
std::vector<CertifiedFactor> factor_squarefree(MonicPolyZ s, const FactorOptions& opts) {
    std::vector<CertifiedFactor> out;
    PolyQ current = s.to_poly();
    IrreducibilityCertificate linear_cert{IrreducibilityCertificate::Kind::linear, 0, {}};

    // root at zero (squarefree, so at most once)
    if (current.degree() >= 1 && current.coeff(0) == 0) {
        out.push_back({MonicPolyZ::linear_root(0), linear_cert});
        current = exact_div(current, PolyQ::variable());
    }
    // integer roots divide the constant term
    if (current.degree() >= 1 && current.coeff(0) != 0) {
        std::vector<Int> divisors = positive_divisors(Int(abs(current.coeff(0).get_num())), opts);
        for (const Int& d : divisors) {
            for (const Int& root : {d, Int(-d)}) {
                if (current.degree() < 1) break;
                if (current.eval(Rat(root)) == 0) {
                    out.push_back({MonicPolyZ::linear_root(root), linear_cert});
                    current = exact_div(current, PolyQ::variable() - PolyQ::constant(Rat(root)));
                }
            }
        }
    }
    if (!current.is_zero() && current.degree() >= 2) {
        factor_nonlinear(MonicPolyZ::from_poly(current), opts, out);
    }
    return out;
}

} // namespace

std::string IrreducibilityCertificate::describe() const {
    switch (kind) {
        case Kind::linear:
            return "degree 1";
        case Kind::irreducible_mod_prime:
            return "irreducible mod " + std::to_string(prime);
        case Kind::degree_patterns: {
            std::string s = "factor degrees mod {";
            for (std::size_t i = 0; i < primes_used.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(primes_used[i]);
            }
            return s + "} exclude all proper divisors";
        }
        case Kind::kronecker_exhausted:
            return "no proper factor found by interpolation search";
    }
    return "";
}

std::vector<FactorUnit> factor_monic(const MonicPolyZ& p, const FactorOptions& opts) {
    if (p.degree() > opts.max_degree) {
        throw UnsupportedInputError("degree " + std::to_string(p.degree()) +
                                    " exceeds the factoring bound " +
                                    std::to_string(opts.max_degree));
    }
    MonicPolyZ sf = squarefree_part(p).part;
    std::vector<CertifiedFactor> irreducibles = factor_squarefree(sf, opts);

    std::sort(irreducibles.begin(), irreducibles.end(),
              [](const CertifiedFactor& a, const CertifiedFactor& b) {
                  if (a.first.degree() != b.first.degree()) {
                      return a.first.degree() < b.first.degree();
                  }
                  return a.first.coeffs() < b.first.coeffs();
              });

    std::vector<FactorUnit> out;
    PolyQ check = PolyQ::constant(Rat(1));
    for (auto& [factor, cert] : irreducibles) {
        int exponent = 0;
        PolyQ rest = p.to_poly();
        while (true) {
            DivRem dr = divrem(rest, factor);
            if (!dr.remainder.is_zero()) break;
            rest = dr.quotient;
            ++exponent;
        }
        for (int e = 0; e < exponent; ++e) check = check * factor.to_poly();
        out.push_back({factor, exponent, cert});
    }
    if (check != p.to_poly()) {
        throw std::logic_error("factor_monic: reconstruction mismatch");
    }
    return out;
}

// ------------------------------------------------------------- maximality ----

bool dedekind_maximal_at(const MonicPolyZ& q, const Int& prime) {
    if (prime < 2 || !probable_prime(prime)) {
        throw std::domain_error(to_string(prime) + " is not prime");
    }
    if (!prime.fits_ulong_p() || prime.get_ui() > (1ul << 31)) {
        throw UnsupportedInputError("prime " + to_string(prime) +
                                    " too large for the residue arithmetic layer");
    }
    const fp::Elem ell = prime.get_ui();

    fp::FpPoly qbar = fp::reduce(q.coeffs(), ell);
    fp::FpPoly rad = fp::radical(qbar, ell);
    fp::FpPoly hbar = fp::divrem(qbar, rad, ell).quotient;

    auto lift = [](const fp::FpPoly& f) {
        std::vector<Rat> coeffs;
        coeffs.reserve(f.size());
        for (fp::Elem c : f) coeffs.emplace_back(static_cast<unsigned long>(c));
        return PolyQ(std::move(coeffs));
    };
    PolyQ g_lift = lift(rad);
    PolyQ h_lift = lift(hbar);
    PolyQ diff = g_lift * h_lift - q.to_poly();
    PolyQ f_poly = make_rat(1, prime) * diff; // exact: g*h = q mod prime

    std::vector<Int> f_int;
    f_int.reserve(f_poly.coeffs().size());
    for (const Rat& c : f_poly.coeffs()) f_int.push_back(to_int(c));
    fp::FpPoly fbar = fp::reduce(f_int, ell);

    fp::FpPoly common = fp::gcd(fp::gcd(rad, hbar, ell), fbar, ell);
    return fp::degree(common) == 0;
}

MaximalityResult is_maximal_order(const MonicPolyZ& q, const FactorOptions& opts) {
    Rat disc = discriminant(q);
    Int d = to_int(disc);
    if (d == 0) {
        throw std::domain_error("discriminant is zero; polynomial is not squarefree");
    }
    Int cofactor;
    std::map<Int, int> factors = trial_factor(d, opts.trial_division_bound, cofactor);
    if (!absorb_cofactor(factors, cofactor)) {
        throw UnsupportedInputError("cannot certify squarefreeness of discriminant " +
                                    to_string(d));
    }
    std::vector<Int> primes_to_check;
    for (const auto& [prime, exp] : factors) {
        if (exp >= 2) primes_to_check.push_back(prime);
    }
    for (const Int& ell : primes_to_check) {
        if (!dedekind_maximal_at(q, ell)) {
            return {false, ell};
        }
    }
    return {true, std::nullopt};
}

// ---------------------------------------------------------- full verdict ----

ClosureReport closure_verdict(const MonicPolyZ& p, const FactorOptions& opts) {
    ClosureReport report{p, false, {}, {}, {}, false, std::nullopt};
    report.squarefree = squarefree_part(p).is_squarefree;
    report.factors = factor_monic(p, opts);
    bool exponents_one = std::all_of(report.factors.begin(), report.factors.end(),
                                     [](const FactorUnit& u) { return u.exponent == 1; });
    if (exponents_one != report.squarefree) {
        throw std::logic_error("squarefree test disagrees with the factor exponents");
    }

    bool all_maximal = true;
    for (std::size_t i = 0; i < report.factors.size(); ++i) {
        MaximalityResult m = is_maximal_order(report.factors[i].factor, opts);
        report.maximality.push_back({i, m.verdict, m.failing_prime});
        all_maximal = all_maximal && m.verdict;
    }

    bool all_unit_resultants = true;
    for (std::size_t i = 0; i < report.factors.size(); ++i) {
        for (std::size_t j = i + 1; j < report.factors.size(); ++j) {
            Rat res = resultant(report.factors[i].factor.to_poly(),
                                report.factors[j].factor.to_poly());
            report.resultants.push_back({i, j, res});
            all_unit_resultants = all_unit_resultants && (res == 1 || res == -1);
        }
    }

    report.verdict = report.squarefree && all_maximal && all_unit_resultants;

    // split case: the verdict must match the discriminant-unit shortcut
    bool split = std::all_of(report.factors.begin(), report.factors.end(),
                             [](const FactorUnit& u) { return u.factor.degree() == 1; });
    if (split) {
        Rat d = discriminant(p);
        bool unit = (d == 1 || d == -1);
        if (unit != report.verdict) {
            throw std::logic_error("split-case discriminant shortcut disagrees with verdict");
        }
    }
    return report;
}

ClosureReport closure_verdict_with_witness(const MonicPolyZ& p, const WitnessBounds& bounds,
                                           const FactorOptions& opts) {
    ClosureReport report = closure_verdict(p, opts);
    if (!report.verdict) {
        report.witness = find_closure_witness(p, bounds.coeff_bound, bounds.denom_bound);
    }
    return report;
}

std::optional<PolyQ> find_closure_witness(const MonicPolyZ& p, long coeff_bound,
                                          long denom_bound) {
    if (coeff_bound < 0 || denom_bound < 2) return std::nullopt;
    const int d = p.degree();

    // coordinate scan order 0, 1, -1, 2, -2, ...
    std::vector<long> sequence;
    sequence.push_back(0);
    for (long v = 1; v <= coeff_bound; ++v) {
        sequence.push_back(v);
        sequence.push_back(-v);
    }

    std::vector<std::size_t> index(static_cast<std::size_t>(d), 0);
    for (long m = 2; m <= denom_bound; ++m) {
        std::fill(index.begin(), index.end(), 0);
        while (true) {
            // index[0] drives the leading coefficient; index[d-1] the constant
            bool all_divisible = true;
            for (std::size_t i = 0; i < index.size(); ++i) {
                if (sequence[index[i]] % m != 0) {
                    all_divisible = false;
                    break;
                }
            }
            if (!all_divisible) {
                std::vector<Rat> coeffs(static_cast<std::size_t>(d));
                for (std::size_t i = 0; i < index.size(); ++i) {
                    coeffs[static_cast<std::size_t>(d) - 1 - i] =
                        make_rat(sequence[index[i]], m);
                }
                PolyQ f{std::move(coeffs)};
                if (is_integral_valued(f, p).member && !in_pullback(f, p)) {
                    return f;
                }
            }
            // advance: constant coefficient fastest
            std::size_t pos = index.size();
            while (pos > 0 && ++index[pos - 1] == sequence.size()) {
                index[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    }
    return std::nullopt;
}

} // namespace ivpoly
