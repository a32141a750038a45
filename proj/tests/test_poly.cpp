#include "doctest.h"

#include "interlace/error.hpp"
#include "interlace/poly.hpp"

#include <random>

using namespace interlace;

namespace {

MPoly P(const char* s) { return parse_poly(s); }

MPoly random_poly(std::mt19937_64& rng) {
    const VarId vars[] = {VarId::y(), VarId::x(), VarId::phi("a"), VarId::chi("b"), VarId::psi("a")};
    std::vector<MPoly::Term> terms;
    const int count = static_cast<int>(rng() % 5);
    for (int t = 0; t < count; ++t) {
        std::vector<Monomial::Factor> f;
        for (auto v : vars)
            if (rng() % 3 == 0) f.emplace_back(v, static_cast<std::uint32_t>(1 + rng() % 3));
        terms.push_back({Monomial::from_factors(f), BigInt(static_cast<long>(rng() % 11) - 5)});
    }
    return MPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("ring examples") {
    const MPoly p = P("phi_a + 3*y^2 - chi_b*y");
    CHECK(MPoly() + p == p);
    CHECK(MPoly(1L) * p == p);
    CHECK(MPoly(VarId::y()) * MPoly(VarId::y()) == P("y^2"));
    CHECK((p - p).is_zero());
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        auto d = a;
        d += d;
        CHECK(d == a * MPoly(2L));
    }
}

TEST_CASE("canonical text round-trips") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        const auto a = random_poly(rng);
        CHECK(parse_poly(to_string(a)) == a);
        CHECK(parse_poly_json(to_json_string(a)) == a);
    }
    CHECK(to_string(MPoly()) == "0");
    CHECK(to_string(P("y + y^2 + 1")) == "y^2 + y + 1");
    CHECK(to_string(P("2*y - 3")) == "2*y - 3");
    CHECK(to_string(P("-y")) == "-y");
    CHECK(to_string(P("chi_b + phi_a")) == "phi_a + chi_b");
    CHECK(to_string(P("(y-1)^2")) == "y^2 - 2*y + 1");
}

TEST_CASE("large coefficients survive text and JSON") {
    const MPoly big = pow(P("2*y"), 100);
    CHECK(parse_poly(to_string(big)) == big);
    CHECK(parse_poly_json(to_json_string(big)) == big);
}

TEST_CASE("parse errors carry a column") {
    try {
        parse_poly("y + * 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.column() == 5);
    }
    CHECK_THROWS_AS(parse_poly("phi_"), ParseError);
    CHECK_THROWS_AS(parse_poly("y^"), ParseError);
    CHECK_THROWS_AS(parse_poly("(y"), ParseError);
}

TEST_CASE("substitution examples") {
    const MPoly base = P("phi_v + chi_v*y + psi_v");
    const MPoly one(1L);
    CHECK(substitute(base, {{VarId::phi("v"), one}, {VarId::chi("v"), one}, {VarId::psi("v"), one}}) == P("2 + y"));
    CHECK(evaluate(P("y^2"), {{VarId::y(), Rational(3)}}) == Rational(9));
    CHECK_THROWS_AS(evaluate(P("y*x"), {{VarId::y(), Rational(3)}}), PreconditionError);

    for (unsigned nu = 0; nu < 5; ++nu) {
        const auto r = substitute_ratio(pow(MPoly(VarId::y()), nu), VarId::y(), P("y - 1"), P("x - 1"));
        CHECK(r.numerator == pow(P("y - 1"), nu));
        CHECK(r.exponent == nu);
    }
}

TEST_CASE("identity substitution is the identity") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto a = random_poly(rng);
        CHECK(substitute(a, {{VarId::y(), MPoly(VarId::y())}, {VarId::phi("a"), MPoly(VarId::phi("a"))}}) == a);
    }
}

TEST_CASE("univariate interpolation") {
    using Pt = std::pair<Rational, Rational>;
    CHECK(interpolate_univariate({Pt(0, 0), Pt(1, 2), Pt(2, 4)}, 2) == P("2*y"));
    CHECK(interpolate_univariate({Pt(0, 1), Pt(1, 1)}, 1) == P("1"));
    CHECK(interpolate_univariate({Pt(0, 0), Pt(1, 1), Pt(2, 8), Pt(3, 27)}, 3) == P("y^3"));
    CHECK_THROWS_AS(interpolate_univariate({Pt(0, 0), Pt(0, 1)}, 1), PreconditionError);
    CHECK_THROWS_AS(interpolate_univariate({Pt(0, 0)}, 1), PreconditionError);
    CHECK_THROWS_AS(interpolate_univariate({Pt(0, 0), Pt(2, 1)}, 1), Error);  // y/2
    CHECK_THROWS_AS(interpolate_univariate({Pt(0, 0), Pt(1, 1), Pt(2, 3)}, 1), PreconditionError);
}

TEST_CASE("variable ordering") {
    CHECK(canonical_less(VarId::y(), VarId::x()));
    CHECK(canonical_less(VarId::v(), VarId::phi("a")));
    CHECK(canonical_less(VarId::psi("a"), VarId::x_of("a")));
    CHECK(canonical_less(VarId::y_of("a"), VarId::phi("b")));
    CHECK(VarId::parse("chi_ab.c") == VarId::chi("ab.c"));
    CHECK_THROWS_AS(VarId::phi("a b"), PreconditionError);
}
