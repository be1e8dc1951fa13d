// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (zero tolerance). Exit status 0 iff every criterion passes.

#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ivpoly/bhargava.hpp"
#include "ivpoly/closure.hpp"
#include "ivpoly/divided_diff.hpp"
#include "ivpoly/expr.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/pullback.hpp"
#include "support/gen.hpp"

using namespace ivpoly;
using testgen::Rng;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& name, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s criterion %d: %s%s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                note.c_str());
    if (!pass) ++g_failures;
}

MonicPolyZ monic(const char* text) { return MonicPolyZ::from_poly(parse_poly(text)); }

bool two_point_membership_example() {
    PolyQ f = parse_poly("(x-1)(x-3)/3");
    std::set<Int> omega{1, 3};
    std::vector<Rat> confluent{Rat(1), Rat(1)};
    if (divided_difference(f, confluent) != make_rat(-2, 3)) return false;
    if (!in_pullback(f, monic("(x-1)(x-3)"))) return false;
    if (bhargava_member_direct(f, omega, 1)) return false;
    auto route = bhargava_member_pullback(f, omega, 1);
    return !route.member && route.failing && *route.failing == monic("(x-1)^2");
}

bool gauss_sqrt2_product_example() {
    if (resultant(parse_poly("x^2+1"), parse_poly("x^2-2")) != 9) return false;

    ClosureReport report = closure_verdict(monic("(x^2+1)(x^2-2)"));
    if (report.verdict || !report.squarefree) return false;
    bool iii_failed = false;
    for (const auto& r : report.resultants) {
        if (r.value != 1 && r.value != -1) iii_failed = true;
    }
    for (const auto& m : report.maximality) {
        if (!m.maximal) return false; // condition ii must hold here
    }
    if (!iii_failed) return false;

    std::vector<MonicPolyZ> pair{monic("x^2+1"), monic("x^2-2")};
    if (equals_product_pullback(pair)) return false;

    PolyQ witness = parse_poly("(x^2+1)/3");
    MonicPolyZ p = monic("(x^2+1)(x^2-2)");
    if (!is_integral_valued(witness, p).member || in_pullback(witness, p)) return false;
    auto found = find_closure_witness(p, 1, 3);
    return found && *found == witness;
}

bool sqrt5_sqrt6_product_example() {
    if (resultant(parse_poly("x^2-5"), parse_poly("x^2-6")) != 1) return false;

    std::vector<MonicPolyZ> pair{monic("x^2-5"), monic("x^2-6")};
    if (!equals_product_pullback(pair)) return false;

    MonicPolyZ p = monic("(x^2-5)(x^2-6)");
    ClosureReport report = closure_verdict(p);
    if (report.verdict) return false;
    bool ii_failed_right = false;
    for (const auto& m : report.maximality) {
        if (!m.maximal) {
            if (report.factors[m.factor_index].factor == monic("x^2-5") && m.failing_prime &&
                *m.failing_prime == 2) {
                ii_failed_right = true;
            } else {
                return false;
            }
        }
    }
    if (!ii_failed_right) return false;

    auto witness = find_closure_witness(p, 6, 2);
    if (!witness) return false;
    return is_integral_valued(*witness, p).member && !in_pullback(*witness, p);
}

bool sqrt2_closed_case() {
    if (discriminant(monic("x^2-2")) != 8) return false;
    if (!closure_verdict(monic("x^2-2")).verdict) return false;
    auto [member, certificate] = is_integral_valued(parse_poly("(x+1)/2"), monic("x^2-5"));
    return member && certificate == parse_poly("x^2-x-1");
}

bool enumeration_over_two_points() {
    std::set<Int> omega{1, 3};
    std::vector<MonicPolyZ> polys = enumerate_split_monic(omega, 2);
    if (polys.size() != 3) return false;
    std::set<std::string> got;
    for (const auto& q : polys) got.insert(poly_to_string(q.to_poly()));
    std::set<std::string> expected{poly_to_string(parse_poly("(x-1)(x-3)")),
                                   poly_to_string(parse_poly("(x-1)^2")),
                                   poly_to_string(parse_poly("(x-3)^2"))};
    return got == expected;
}

bool oracle_equivalences() {
    Rng rng(2024);

    // remainder test vs companion-matrix oracle
    for (int iter = 0; iter < 500; ++iter) {
        PolyQ f = testgen::random_poly(rng, 6, 20, 20);
        MonicPolyZ p = testgen::random_monic(rng, static_cast<int>(rng.range(1, 6)), 20);
        if (in_pullback(f, p) != companion_oracle_member(f, p)) return false;
    }

    // split-case divided-difference membership vs remainder test
    for (int iter = 0; iter < 500; ++iter) {
        RootMultiset roots;
        MonicPolyZ p = testgen::random_split_monic(rng, static_cast<int>(rng.range(1, 6)), 4,
                                                   &roots);
        PolyQ f = testgen::random_poly(rng, 6, 20, 20);
        if (split_membership(f, p, roots) != in_pullback(f, p)) return false;
    }

    // direct vs pullback-intersection membership for the divided-difference rings
    for (int iter = 0; iter < 500; ++iter) {
        std::set<Int> omega;
        int size = static_cast<int>(rng.range(1, 3));
        while (static_cast<int>(omega.size()) < size) omega.emplace(rng.range(-3, 3));
        int order = static_cast<int>(rng.range(0, 3));
        PolyQ f = testgen::random_poly(rng, 6, 20, 20);
        if (bhargava_member_direct(f, omega, order) !=
            bhargava_member_pullback(f, omega, order).member) {
            return false;
        }
    }
    return true;
}

bool structural_properties() {
    Rng rng(2025);

    // monic integral equation: p divides P(f) always
    for (int iter = 0; iter < 500; ++iter) {
        PolyQ f = testgen::random_poly(rng, 5, 10, 6);
        MonicPolyZ p = testgen::random_monic(rng, static_cast<int>(rng.range(1, 5)), 10);
        if (!divisibility_certificate(f, p)) return false;
    }

    // Newton expansion round trip
    for (int iter = 0; iter < 500; ++iter) {
        PolyQ f = testgen::random_poly(rng, 6, 12, 8);
        std::vector<Rat> nodes;
        for (int i = 0; i < 7; ++i) nodes.emplace_back(rng.range(-4, 4));
        std::vector<Rat> coeffs = newton_expand(f, nodes);
        if (newton_reconstruct(coeffs, nodes) != f) return false;
    }

    // Leibniz rule on tuples of length <= 5
    for (int iter = 0; iter < 500; ++iter) {
        PolyQ f = testgen::random_poly(rng, 4, 8, 4);
        PolyQ g = testgen::random_poly(rng, 4, 8, 4);
        std::vector<Rat> points;
        int n = static_cast<int>(rng.range(1, 5));
        for (int i = 0; i < n; ++i) points.emplace_back(rng.range(-3, 3));
        if (!leibniz_check(f, g, points)) return false;
    }

    // divided differences of p vanish on every sub-multiset of its roots
    // (orders 0 .. n-1, full multiset included); the order-n difference is
    // the leading 1 at any points
    for (int iter = 0; iter < 500; ++iter) {
        RootMultiset roots;
        MonicPolyZ p = testgen::random_split_monic(rng, static_cast<int>(rng.range(1, 6)), 4,
                                                   &roots);
        std::size_t n = roots.cardinality();
        for (std::size_t size = 1; size <= n; ++size) {
            for (const RootMultiset& sub : roots.submultisets_of_size(size)) {
                if (divided_difference(p.to_poly(), sub) != 0) return false;
            }
        }
        std::vector<Rat> topped = roots.sorted_values();
        topped.emplace_back(rng.range(-4, 4));
        if (divided_difference(p.to_poly(), topped) != 1) return false;
    }

    // ring closure of the pullback under + and *
    for (int iter = 0; iter < 500; ++iter) {
        MonicPolyZ p = testgen::random_monic(rng, static_cast<int>(rng.range(1, 5)), 6);
        auto member = [&] {
            std::vector<Rat> r;
            for (int i = 0; i < p.degree(); ++i) r.emplace_back(rng.range(-6, 6));
            return PolyQ(std::move(r)) + p.to_poly() * testgen::random_poly(rng, 3, 5, 4);
        };
        PolyQ f = member(), g = member();
        if (!in_pullback(f + g, p) || !in_pullback(f * g, p)) return false;
    }

    // divisor monotonicity of membership
    for (int iter = 0; iter < 500; ++iter) {
        MonicPolyZ q = testgen::random_monic(rng, static_cast<int>(rng.range(1, 3)), 5);
        MonicPolyZ m = testgen::random_monic(rng, static_cast<int>(rng.range(1, 3)), 5);
        MonicPolyZ p = q * m;
        PolyQ f = testgen::random_poly(rng, 6, 10, 5);
        if (in_pullback(f, p) && !in_pullback(f, q)) return false;
    }
    return true;
}

bool split_closure_agreement() {
    Rng rng(2026);
    for (int iter = 0; iter < 200; ++iter) {
        int degree = static_cast<int>(rng.range(1, 4));
        MonicPolyZ p = testgen::random_split_squarefree(rng, degree, 4);
        Rat disc = discriminant(p);
        bool unit = (disc == 1 || disc == -1);
        if (closure_verdict(p).verdict != unit) return false;
    }
    return true;
}

bool constructive_integral_equations() {
    Rng rng(2027);
    for (int iter = 0; iter < 100; ++iter) {
        std::set<Int> omega;
        int size = static_cast<int>(rng.range(1, 3));
        while (static_cast<int>(omega.size()) < size) omega.emplace(rng.range(-3, 3));
        int order = static_cast<int>(rng.range(0, 2));

        // integer-valued by construction: h + (g/m) * prod (X - a)
        PolyQ vanish = PolyQ::constant(Rat(1));
        for (const Int& a : omega) {
            vanish = vanish * (PolyQ::variable() - PolyQ::constant(Rat(a)));
        }
        PolyQ h = testgen::random_poly(rng, 2, 6, 1);
        PolyQ g = testgen::random_poly(rng, 2, 6, 1);
        PolyQ f = h + make_rat(1, rng.range(2, 5)) * (g * vanish);

        // synthesize_integral_equation verifies the divisibility internally
        // and throws on failure
        MonicPolyZ q = synthesize_integral_equation(f, omega, order);
        if (q.degree() != static_cast<int>(omega.size()) * (order + 1)) return false;
    }
    return true;
}

} // namespace

int main() {
    criterion(1, "confluent divided difference, membership, and failing divisor for "
                 "(x-1)(x-3)/3 over {1,3}",
              two_point_membership_example);
    criterion(2, "resultant 9, non-closed verdict, and validated witness for (x^2+1)(x^2-2)",
              gauss_sqrt2_product_example);
    criterion(3, "unit resultant, maximality failure at 2, and witness for (x^2-5)(x^2-6)",
              sqrt5_sqrt6_product_example);
    criterion(4, "discriminant 8, closed verdict for x^2-2, golden-ratio certificate",
              sqrt2_closed_case);
    criterion(5, "degree-2 split polynomials over {1,3}", enumeration_over_two_points);
    criterion(6, "oracle equivalences, 500 random cases each", oracle_equivalences);
    criterion(7, "structural properties, 500 random cases each", structural_properties);
    criterion(8, "split squarefree closure verdict agrees with the unit-discriminant test "
                 "(200 cases)",
              split_closure_agreement);
    criterion(9, "integral equations synthesized and verified for 100 integer-valued inputs",
              constructive_integral_equations);

    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
