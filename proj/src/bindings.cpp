#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <string>
#include <vector>

#include "ivpoly/bhargava.hpp"
#include "ivpoly/closure.hpp"
#include "ivpoly/divided_diff.hpp"
#include "ivpoly/errors.hpp"
#include "ivpoly/expr.hpp"
#include "ivpoly/matrix.hpp"
#include "ivpoly/pullback.hpp"

namespace py = pybind11;
using namespace ivpoly;

namespace {

MonicPolyZ as_monic(const PolyQ& p) {
    auto m = MonicPolyZ::try_from_poly(p);
    if (!m) {
        throw std::domain_error("expected a monic integer polynomial of degree >= 1");
    }
    return *m;
}

std::vector<std::string> coeff_strings(const PolyQ& f) {
    std::vector<std::string> out;
    out.reserve(f.coeffs().size());
    for (const Rat& c : f.coeffs()) out.push_back(to_string(c));
    return out;
}

std::vector<Rat> rat_points(const py::sequence& seq) {
    std::vector<Rat> out;
    for (const auto& item : seq) {
        out.push_back(parse_rat(py::str(item).cast<std::string>()));
    }
    return out;
}

std::set<Int> int_set(const std::vector<long>& values) {
    std::set<Int> out;
    for (long v : values) out.emplace(v);
    if (out.empty()) throw std::domain_error("empty evaluation set");
    return out;
}

py::dict report_dict(const ClosureReport& report) {
    py::dict d;
    d["p"] = poly_to_string(report.input.to_poly());
    d["squarefree"] = report.squarefree;
    py::list factors;
    for (const auto& u : report.factors) {
        py::dict f;
        f["poly"] = poly_to_string(u.factor.to_poly());
        f["exponent"] = u.exponent;
        f["certificate"] = u.certificate.describe();
        factors.append(f);
    }
    d["factors"] = factors;
    py::list maximality;
    for (const auto& m : report.maximality) {
        py::dict e;
        e["factor"] = m.factor_index;
        e["maximal"] = m.maximal;
        if (m.failing_prime) e["failing_prime"] = to_string(*m.failing_prime);
        maximality.append(e);
    }
    d["maximality"] = maximality;
    py::list resultants;
    for (const auto& r : report.resultants) {
        py::dict e;
        e["i"] = r.i;
        e["j"] = r.j;
        e["value"] = to_string(r.value);
        resultants.append(e);
    }
    d["resultants"] = resultants;
    d["verdict"] = report.verdict;
    if (report.witness) {
        d["witness"] = poly_to_string(*report.witness);
    } else {
        d["witness"] = py::none();
    }
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact pullback-ring membership, divided differences, and integral closure "
              "over the rationals";

    py::register_exception<UnsupportedInputError>(m, "UnsupportedInputError");
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<PolyQ>(m, "Poly")
        .def(py::init([](const std::string& text) { return parse_poly(text); }))
        .def("__str__", &poly_to_string)
        .def("__repr__", [](const PolyQ& f) { return "Poly('" + poly_to_string(f) + "')"; })
        .def("__eq__", [](const PolyQ& a, const PolyQ& b) { return a == b; })
        .def("__add__", [](const PolyQ& a, const PolyQ& b) { return a + b; })
        .def("__sub__", [](const PolyQ& a, const PolyQ& b) { return a - b; })
        .def("__mul__", [](const PolyQ& a, const PolyQ& b) { return a * b; })
        .def("__neg__", [](const PolyQ& a) { return -a; })
        .def_property_readonly("is_zero", &PolyQ::is_zero)
        .def_property_readonly("degree",
                               [](const PolyQ& f) -> py::object {
                                   if (f.is_zero()) return py::none();
                                   return py::int_(f.degree());
                               })
        .def("coeffs", &coeff_strings,
             "coefficients ascending by degree, as exact 'num/den' strings")
        .def("is_integer_poly", &PolyQ::is_integral)
        .def("eval", [](const PolyQ& f, const std::string& point) {
            return to_string(f.eval(parse_rat(point)));
        });

    m.def("parse", &parse_poly, py::arg("text"), "parse a polynomial expression in x");

    m.def(
        "in_pullback",
        [](const PolyQ& f, const PolyQ& p) { return in_pullback(f, as_monic(p)); },
        py::arg("f"), py::arg("p"),
        "membership of f in Z[x] + p*Q[x] (remainder of f mod p is integral)");

    m.def(
        "pullback_contains",
        [](const PolyQ& p, const PolyQ& q) {
            return pullback_contains(as_monic(p), as_monic(q));
        },
        py::arg("p"), py::arg("q"));

    m.def(
        "in_intersection",
        [](const PolyQ& f, const std::vector<PolyQ>& qs) {
            std::vector<MonicPolyZ> monics;
            monics.reserve(qs.size());
            for (const PolyQ& q : qs) monics.push_back(as_monic(q));
            return in_intersection(f, monics);
        },
        py::arg("f"), py::arg("qs"),
        "membership in the intersection of the pullback rings of qs");

    m.def(
        "companion_oracle_member",
        [](const PolyQ& f, const PolyQ& p) { return companion_oracle_member(f, as_monic(p)); },
        py::arg("f"), py::arg("p"), "independent membership oracle through f(C_p)");

    m.def(
        "divided_difference",
        [](const PolyQ& f, const py::sequence& points) {
            return to_string(divided_difference(f, rat_points(points)));
        },
        py::arg("f"), py::arg("points"),
        "exact divided difference; repeated points take the confluent value");

    m.def(
        "newton_expand",
        [](const PolyQ& f, const py::sequence& nodes) {
            std::vector<std::string> out;
            for (const Rat& c : newton_expand(f, rat_points(nodes))) {
                out.push_back(to_string(c));
            }
            return out;
        },
        py::arg("f"), py::arg("nodes"));

    m.def(
        "newton_reconstruct",
        [](const py::sequence& coeffs, const py::sequence& nodes) {
            return newton_reconstruct(rat_points(coeffs), rat_points(nodes));
        },
        py::arg("coeffs"), py::arg("nodes"));

    m.def(
        "resultant",
        [](const PolyQ& f, const PolyQ& g) { return to_string(resultant(f, g)); },
        py::arg("f"), py::arg("g"));

    m.def(
        "discriminant",
        [](const PolyQ& p) { return to_string(discriminant(as_monic(p))); },
        py::arg("p"));

    m.def(
        "image_charpoly",
        [](const PolyQ& f, const PolyQ& p) { return image_charpoly(f, as_monic(p)); },
        py::arg("f"), py::arg("p"),
        "monic polynomial whose roots are the values of f on the roots of p");

    m.def(
        "is_integral_valued",
        [](const PolyQ& f, const PolyQ& p) {
            IntegralValueResult r = is_integral_valued(f, as_monic(p));
            return py::make_tuple(r.member, r.certificate);
        },
        py::arg("f"), py::arg("p"),
        "(member, certificate): membership in the integral closure of the pullback ring");

    m.def(
        "closure_verdict",
        [](const PolyQ& p, bool witness, long coeff_bound, long denom_bound) {
            ClosureReport report =
                witness ? closure_verdict_with_witness(as_monic(p), {coeff_bound, denom_bound})
                        : closure_verdict(as_monic(p));
            return report_dict(report);
        },
        py::arg("p"), py::arg("witness") = false, py::arg("coeff_bound") = 6,
        py::arg("denom_bound") = 3, "per-condition closedness report for the pullback ring");

    m.def(
        "find_closure_witness",
        [](const PolyQ& p, long coeff_bound, long denom_bound) -> py::object {
            auto w = find_closure_witness(as_monic(p), coeff_bound, denom_bound);
            if (!w) return py::none();
            return py::cast(*w);
        },
        py::arg("p"), py::arg("coeff_bound") = 6, py::arg("denom_bound") = 3);

    m.def(
        "enumerate_split_monic",
        [](const std::vector<long>& omega, int degree) {
            std::vector<PolyQ> out;
            for (const MonicPolyZ& q : enumerate_split_monic(int_set(omega), degree)) {
                out.push_back(q.to_poly());
            }
            return out;
        },
        py::arg("omega"), py::arg("degree"),
        "monic polynomials of the given degree with all roots in omega");

    m.def(
        "bhargava_member",
        [](const PolyQ& f, const std::vector<long>& omega, int order, const std::string& route) {
            std::set<Int> o = int_set(omega);
            if (route == "direct") return bhargava_member_direct(f, o, order);
            if (route == "pullback") return bhargava_member_pullback(f, o, order).member;
            throw std::domain_error("route must be 'direct' or 'pullback'");
        },
        py::arg("f"), py::arg("omega"), py::arg("order"), py::arg("route") = "direct",
        "membership in the ring of polynomials with integer-valued divided differences");

    m.def(
        "bhargava_failing_pullback",
        [](const PolyQ& f, const std::vector<long>& omega, int order) -> py::object {
            auto r = bhargava_member_pullback(f, int_set(omega), order);
            if (r.failing) return py::cast(r.failing->to_poly());
            return py::none();
        },
        py::arg("f"), py::arg("omega"), py::arg("order"));

    m.def(
        "synthesize_integral_equation",
        [](const PolyQ& f, const std::vector<long>& omega, int order) {
            return synthesize_integral_equation(f, int_set(omega), order).to_poly();
        },
        py::arg("f"), py::arg("omega"), py::arg("order"),
        "monic Q with Q(f) divisible by every split polynomial of degree order+1 over omega");
}
