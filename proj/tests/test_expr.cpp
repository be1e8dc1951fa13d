#include <doctest.h>

#include <sstream>

#include "ivpoly/cli.hpp"
#include "ivpoly/errors.hpp"
#include "ivpoly/expr.hpp"
#include "support/gen.hpp"

using namespace ivpoly;
using testgen::Rng;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE_BEGIN("expr");

TEST_CASE("parsing the worked inputs") {
    CHECK(parse_poly("(x-1)(x-3)/3") == make_rat(1, 3) * parse_poly("x^2-4x+3"));
    CHECK(parse_poly("x^2 - 2") == parse_poly("x^2-2"));
    CHECK(parse_poly("(x+1)/2") == make_rat(1, 2) * parse_poly("x+1"));
}

TEST_CASE("grammar features") {
    CHECK(parse_poly("2x") == parse_poly("2*x"));
    CHECK(parse_poly("023196") == PolyQ::constant(Rat(23196))); // decimal, never octal
    CHECK(parse_poly("x X") == parse_poly("x^2"));
    CHECK(parse_poly("-x^2") == -parse_poly("x^2"));
    CHECK(parse_poly("1/2 x") == make_rat(1, 2) * PolyQ::variable());
    CHECK(parse_poly("(x+1)^3") == parse_poly("x^3+3x^2+3x+1"));
    CHECK(parse_poly("5") == PolyQ::constant(Rat(5)));
    CHECK(parse_poly("0").is_zero());
    CHECK(parse_poly("2(x+1)") == parse_poly("2x+2"));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_poly("x +"), ParseError);
    CHECK_THROWS_AS(parse_poly("(x"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/(x+1)"), ParseError);
    CHECK_THROWS_AS(parse_poly("x/0"), ParseError);
    CHECK_THROWS_AS(parse_poly("y+1"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
    try {
        parse_poly("x^2 @ 1");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("canonical printing") {
    CHECK(poly_to_string(parse_poly("x^2-4x+3")) == "x^2 - 4*x + 3");
    CHECK(poly_to_string(parse_poly("(x^2+1)/3")) == "1/3*x^2 + 1/3");
    CHECK(poly_to_string(PolyQ()) == "0");
    CHECK(poly_to_string(parse_poly("-x")) == "-x");
    CHECK(poly_to_string(parse_poly("x^5")) == "x^5");
    CHECK(poly_to_string(PolyQ::constant(make_rat(-3, 7))) == "-3/7");
}

TEST_CASE("print-parse round trip on a generated corpus") {
    Rng rng(701);
    for (int iter = 0; iter < 1000; ++iter) {
        PolyQ f = testgen::random_poly(rng, 8, 40, 12);
        CHECK(parse_poly(poly_to_string(f)) == f);
    }
}

TEST_CASE("malformed input never escapes as anything but a parse error") {
    Rng rng(702);
    const std::string alphabet = "x0123456789+-*/^() .";
    for (int iter = 0; iter < 2000; ++iter) {
        std::string soup;
        int len = static_cast<int>(rng.range(0, 16));
        for (int i = 0; i < len; ++i) {
            soup += alphabet[static_cast<std::size_t>(
                rng.range(0, static_cast<long>(alphabet.size()) - 1))];
        }
        try {
            parse_poly(soup); // accepted inputs are fine too
        } catch (const ParseError&) {
            // expected for malformed text
        }
    }
}

TEST_CASE("rational lists") {
    std::vector<Rat> points = parse_rat_list("1,1");
    REQUIRE(points.size() == 2);
    CHECK(points[0] == 1);
    std::vector<Rat> mixed = parse_rat_list("1/2,-5/3, 4");
    CHECK(mixed[1] == make_rat(-5, 3));
    CHECK(mixed[2] == 4);
    CHECK_THROWS_AS(parse_rat_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_int_list("1/2"), std::domain_error);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cli");

TEST_CASE("member command") {
    CliResult r = run_cli({"member", "--f", "x", "--p", "x^2-2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("member: true") != std::string::npos);

    CliResult strict = run_cli({"member", "--f", "x/2", "--p", "x^2-2", "--strict"});
    CHECK(strict.code == 1);
    CHECK(strict.out.find("member: false") != std::string::npos);

    CliResult integral =
        run_cli({"member", "--f", "(x+1)/2", "--p", "x^2-5", "--ring", "integral", "--json"});
    CHECK(integral.code == 0);
    CHECK(integral.out.find("\"verdict\": true") != std::string::npos);
    CHECK(integral.out.find("x^2 - x - 1") != std::string::npos);

    CliResult bh = run_cli({"member", "--f", "(x-1)(x-3)/3", "--ring", "bhargava", "--omega",
                            "1,3", "--n", "1"});
    CHECK(bh.code == 0);
    CHECK(bh.out.find("member: false") != std::string::npos);
}

TEST_CASE("divdiff command") {
    CliResult r = run_cli({"divdiff", "--f", "(x-1)(x-3)/3", "--points", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.out == "-2/3\n");
}

TEST_CASE("closure command with witness") {
    CliResult r = run_cli({"closure", "--p", "(x^2+1)(x^2-2)", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": false") != std::string::npos);
    CHECK(r.out.find("\"value\": \"9\"") != std::string::npos);

    CliResult w = run_cli({"closure", "--p", "(x^2+1)(x^2-2)", "--witness", "--coeff-bound",
                           "1", "--denom-bound", "3"});
    CHECK(w.out.find("witness: 1/3*x^2 + 1/3") != std::string::npos);
}

TEST_CASE("bhargava command cross-check") {
    CliResult r = run_cli({"bhargava", "--f", "(x-1)(x-3)/3", "--omega", "1,3", "--n", "1",
                           "--cross-check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("member: false") != std::string::npos);
    CHECK(r.out.find("[agrees]") != std::string::npos);
}

TEST_CASE("paper-examples command") {
    CliResult r = run_cli({"paper-examples"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("all examples reproduced") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"member", "--f", "x +", "--p", "x^2"}).code == cli::kExitUsage);
    CHECK(run_cli({"member", "--f", "x"}).code == cli::kExitUsage); // pullback needs --p
    CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
    CHECK(run_cli({"closure", "--p", "x^12-2"}).code == cli::kExitUnsupported);
    CHECK(run_cli({"member", "--f", "x", "--p", "2x+1"}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == cli::kExitOk);
}

TEST_CASE("bhargava json shape") {
    CliResult r = run_cli({"bhargava", "--f", "(x-1)(x-3)/3", "--omega", "1,3", "--n", "1",
                           "--cross-check", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"verdict\": false") != std::string::npos);
    CHECK(r.out.find("\"failing_pullback\": \"x^2 - 2*x + 1\"") != std::string::npos);
    CHECK(r.out.find("\"agree\": true") != std::string::npos);
}

TEST_CASE("json output is byte-identical across runs") {
    std::vector<std::string> args{"closure", "--p", "(x^2-5)(x^2-6)", "--json"};
    CliResult a = run_cli(args);
    CliResult b = run_cli(args);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"schema\": 1") != std::string::npos);

    std::vector<std::string> margs{"member", "--f", "(x^2+1)/3", "--p", "(x^2+1)(x^2-2)",
                                   "--json"};
    CHECK(run_cli(margs).out == run_cli(margs).out);
}

TEST_SUITE_END();
