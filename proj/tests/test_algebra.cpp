#include <doctest.h>

#include "ldef/algebra/fraction.hpp"
#include "ldef/algebra/groebner.hpp"
#include "ldef/algebra/quotient.hpp"
#include "ldef/algebra/series.hpp"

#include <random>

using namespace ldef;

namespace {

Poly random_poly(const RingPtr& ring, std::mt19937& rng, unsigned max_deg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, static_cast<int>(max_deg));
    std::vector<Term> ts;
    for (int i = 0; i < terms; ++i) {
        Exponents e(ring->nvars());
        unsigned budget = static_cast<unsigned>(deg(rng));
        for (auto& x : e) {
            unsigned take = std::uniform_int_distribution<unsigned>(0, budget)(rng);
            x = take;
            budget -= take;
        }
        Rational c(coef(rng), 1 + std::abs(coef(rng)));
        c.canonicalize();
        ts.push_back({e, c});
    }
    return Poly::from_terms(ring, ts);
}

}  // namespace

TEST_CASE("rational text round trip") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-7")) == "-7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
}

TEST_CASE("polynomial parse and print") {
    auto r = make_ring({"x", "y"});
    Poly p = Poly::parse(r, "(x + y)^2 - 2*x*y");
    CHECK(p.to_string() == "x^2 + y^2");
    CHECK(Poly::parse(r, p.to_string()) == p);
    CHECK(Poly::parse(r, "3/2*x - 1/2").to_string() == "3/2*x - 1/2");
    CHECK(Poly::parse(r, "0").is_zero());
}

TEST_CASE("substitution") {
    auto r = make_ring({"X", "Y"});
    Poly p = Poly::parse(r, "X*Y - Y");
    CHECK(poly_substitute(p, RationalAssignment{{"X", 1}}).is_zero());
    CHECK(poly_substitute(p, RationalAssignment{}) == p);
    CHECK(poly_substitute(p, RationalAssignment{{"Z", 3}}) == p);
    auto other = make_ring({"a"});
    CHECK_THROWS_AS(poly_substitute(p, Assignment{{"X", Poly::variable(other, 0)}}), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    auto r = make_ring({"x", "y", "z"});
    std::mt19937 rng(11);
    for (int i = 0; i < 40; ++i) {
        Poly a = random_poly(r, rng, 3, 4), b = random_poly(r, rng, 3, 4), c = random_poly(r, rng, 3, 4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("hand-run Buchberger on <x^2, xy - y>") {
    auto r = make_ring({"x", "y"});
    Poly f = Poly::parse(r, "x^2"), g = Poly::parse(r, "x*y - y");
    // S(f, g) = y*f - x*g = x*y, then x*y - g = y.
    Poly s = Poly::parse(r, "y") * f - Poly::parse(r, "x") * g;
    CHECK(s == Poly::parse(r, "x*y"));
    CHECK(s - g == Poly::parse(r, "y"));
    GroebnerResult gb = groebner_basis({f, g});
    CHECK(gb.complete);
    REQUIRE(gb.basis.size() == 2);
    CHECK(gb.basis[0] == Poly::parse(r, "y"));
    CHECK(gb.basis[1] == Poly::parse(r, "x^2"));
}

TEST_CASE("principal ideals are their own bases") {
    auto r = make_ring({"u", "v"});
    GroebnerResult a = groebner_basis({Poly::parse(r, "u*v")});
    CHECK(a.complete);
    REQUIRE(a.basis.size() == 1);
    CHECK(a.basis[0] == Poly::parse(r, "u*v"));
    auto t = make_ring({"t"});
    Poly p = Poly::parse(t, "t^5*(10*t - 1)");
    GroebnerResult b = groebner_basis({p});
    REQUIRE(b.basis.size() == 1);
    CHECK(b.basis[0] == p.monic());
}

TEST_CASE("degree cap is reported") {
    auto r = make_ring({"x", "y", "z"});
    std::vector<Poly> gens{Poly::parse(r, "x^2*y - z^2"), Poly::parse(r, "x*y^2 - y")};
    GroebnerResult capped = groebner_basis(gens, 3);
    CHECK_FALSE(capped.complete);
    GroebnerResult full = groebner_basis(gens);
    CHECK(full.complete);
}

TEST_CASE("normal form properties and membership") {
    auto r = make_ring({"x", "y", "z"});
    std::mt19937 rng(5);
    for (int round = 0; round < 10; ++round) {
        std::vector<Poly> gens{random_poly(r, rng, 2, 3), random_poly(r, rng, 2, 3)};
        GroebnerResult gb = groebner_basis(gens);
        REQUIRE(gb.complete);
        for (auto& g : gens) CHECK(reduces_to_zero(g, gb.basis));
        for (int i = 0; i < 5; ++i) {
            Poly p = random_poly(r, rng, 3, 4), q = random_poly(r, rng, 3, 4);
            Poly np = normal_form(p, gb.basis), nq = normal_form(q, gb.basis);
            CHECK(normal_form(np, gb.basis) == np);
            CHECK(normal_form(p * q, gb.basis) == normal_form(np * nq, gb.basis));
            CHECK(reduces_to_zero(p * gens[0] + q * gens[1], gb.basis));
        }
    }
}

TEST_CASE("quotient dimensions") {
    auto u = make_ring({"u"});
    CHECK(quotient_k_dimension(make_quotient(u, {Poly::parse(u, "u^5")}, {0})).value == 5);
    auto uv = make_ring({"u", "v"});
    CHECK(quotient_k_dimension(make_quotient(uv, {Poly::parse(uv, "u*v")}, {0, 0})).kind == DimKind::Infinite);
    auto t = make_ring({"t"});
    CHECK(quotient_k_dimension(make_quotient(t, {}, {0})).kind == DimKind::Infinite);
    CHECK_THROWS_AS(make_quotient(t, {Poly::parse(t, "t - 1")}, {0}), std::invalid_argument);
}

TEST_CASE("monomial ideal dimension oracle") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<unsigned> pick(1, 5), nv(1, 3);
    for (int i = 0; i < 10; ++i) {
        unsigned k = nv(rng);
        std::vector<std::string> names;
        for (unsigned v = 0; v < k; ++v) names.push_back("x" + std::to_string(v + 1));
        auto r = make_ring(names);
        std::vector<Poly> gens;
        std::uint64_t expect = 1;
        for (unsigned v = 0; v < k; ++v) {
            unsigned a = pick(rng);
            Exponents e(k, 0);
            e[v] = a;
            gens.push_back(Poly::monomial(r, e, 1));
            expect *= a;
        }
        KDimension d = quotient_k_dimension(make_quotient(r, gens, RationalVector(k, 0)));
        REQUIRE(d.finite());
        CHECK(d.value == expect);
        CHECK(local_k_dimension(make_quotient(r, gens, RationalVector(k, 0))).value == expect);
    }
}

TEST_CASE("localization strips unit factors") {
    auto t = make_ring({"t"});
    auto q = make_quotient(t, {Poly::parse(t, "t^5*(10*t - 1)")}, {0});
    CHECK(quotient_k_dimension(q).value == 6);
    auto at0 = localize_at(q, {0});
    REQUIRE(at0.ideal.generators().size() == 1);
    CHECK(at0.ideal.generators()[0] == Poly::parse(t, "t^5"));
    CHECK(quotient_k_dimension(at0).value == 5);
    CHECK(local_k_dimension(q).value == 5);
    CHECK(local_nilpotency_order(q, Poly::parse(t, "t"), 10) == 5);

    auto at_tenth = localize_at(q, {Rational(1, 10)});
    CHECK(at_tenth.ideal.generators()[0] == Poly::parse(t, "t"));
    CHECK(quotient_k_dimension(at_tenth).value == 1);
    auto q2 = make_quotient(t, {Poly::parse(t, "t^5*(10*t - 1)")}, {Rational(1, 10)});
    CHECK(local_k_dimension(q2).value == 1);

    auto uv = make_ring({"u", "v"});
    auto p = make_quotient(uv, {Poly::parse(uv, "u*v")}, {0, 0});
    CHECK(localize_at(p, {0, 0}).ideal.generators()[0] == Poly::parse(uv, "u*v"));
    CHECK_THROWS_AS(localize_at(q, {1}), std::invalid_argument);
}

TEST_CASE("isolated points") {
    auto uv = make_ring({"u", "v"});
    auto line_pair = make_quotient(uv, {Poly::parse(uv, "u*v")}, {0, 0});
    CHECK_FALSE(is_isolated_point(line_pair).isolated);
    CHECK(local_k_dimension(line_pair).kind == DimKind::Infinite);
    // Circle and parabola meet at the origin with multiplicity 2 and at (1, 1), (-1, 1).
    auto q = make_quotient(uv, {Poly::parse(uv, "u^2 + v^2 - 2*v"), Poly::parse(uv, "v - u^2")}, {0, 0});
    CHECK(is_isolated_point(q).isolated);
    CHECK(local_k_dimension(q).value == 2);
    auto far = make_quotient(uv, {Poly::parse(uv, "u*(u - 1)"), Poly::parse(uv, "v")}, {1, 0});
    CHECK(local_k_dimension(far).value == 1);
}

TEST_CASE("truncated series arithmetic") {
    auto t = make_ring({"t"});
    LocalFraction f(Poly::parse(t, "2 - 5*t"), Poly::parse(t, "2 + t"), {0});
    CHECK(series_expand(f, 2).to_string() == "1 - 3*t + 3/2*t^2");
    CHECK(series_expand(LocalFraction::from_poly(Poly::constant(t, 1), {0}), 3).to_string() == "1");
    LocalFraction g(Poly::parse(t, "t"), Poly::parse(t, "1 - t"), {0});
    CHECK(series_expand(g, 3).to_string() == "t + t^2 + t^3");
    CHECK_THROWS_AS(LocalFraction(Poly::parse(t, "1"), Poly::parse(t, "t"), {0}), std::domain_error);
}

TEST_CASE("series times denominator recovers numerator") {
    auto r = make_ring({"s", "t"});
    std::mt19937 rng(9);
    for (int i = 0; i < 20; ++i) {
        Poly n = random_poly(r, rng, 3, 4);
        Poly d = random_poly(r, rng, 2, 3) * Poly::parse(r, "s") + Poly::constant(r, Rational(1 + i % 3) / 2);
        LocalFraction f(n, d, {0, 0});
        for (unsigned order : {1u, 3u, 5u}) {
            TruncatedSeries s = series_expand(f, order);
            CHECK(s * TruncatedSeries::from_poly(f.den(), order) == TruncatedSeries::from_poly(f.num(), order));
        }
    }
}

TEST_CASE("evaluate_poly on series") {
    auto x = make_ring({"x", "y"});
    std::vector<std::string> params{"t"};
    TruncatedSeries t = TruncatedSeries::variable(params, 4, 0);
    TruncatedSeries one = TruncatedSeries::constant(params, 4, 1);
    Poly p = Poly::parse(x, "x*y + y^2");
    TruncatedSeries v = evaluate_poly(p, {one + t, t});
    CHECK(v.to_string() == "t + 2*t^2");
}

TEST_CASE("local fractions") {
    auto t = make_ring({"t"});
    LocalFraction a(Poly::parse(t, "12*t^3 - 21*t^4"), Poly::parse(t, "2*(2 + t)*(1 - t^2)"), {0});
    CHECK(a.to_string() == "(-21*t^4 + 12*t^3)/(2*(-t + 1)*(t + 1)*(t + 2))");
    LocalFraction b(Poly::parse(t, "(2 - 5*t)*(1 + t)"), Poly::parse(t, "(2 + t)*(1 + t)"), {0});
    CHECK(b.den() == Poly::parse(t, "t + 2"));
    CHECK(b.to_string() == "(-5*t + 2)/(t + 2)");
    CHECK(b == LocalFraction(Poly::parse(t, "4 - 10*t"), Poly::parse(t, "4 + 2*t"), {0}));
    LocalFraction c = b + LocalFraction(Poly::parse(t, "6*t"), Poly::parse(t, "2 + t"), {0});
    CHECK(c == LocalFraction::from_poly(Poly::parse(t, "1"), {0}));
    LocalFraction unit(Poly::parse(t, "10*t - 1"), Poly::parse(t, "t + 2"), {0});
    LocalFraction g1(Poly::parse(t, "9*t^5*(10*t - 1)"), Poly::parse(t, "(t - 1)*(t + 1)*(t + 2)^2"), {0});
    CHECK(g1.associate_of(LocalFraction::from_poly(Poly::parse(t, "t^5"), {0})));
    CHECK_FALSE(g1.associate_of(LocalFraction::from_poly(Poly::parse(t, "t^4"), {0})));
    CHECK((g1 / unit).associate_of(g1));
    CHECK_THROWS_AS(g1 / g1, std::domain_error);
    auto uv = make_ring({"u", "v"});
    std::vector<Poly> basis = groebner_basis({Poly::parse(uv, "u*v")}).basis;
    LocalFraction x(Poly::parse(uv, "u + u*v"), Poly::parse(uv, "1 + v"), {0, 0});
    CHECK(x.equal_modulo(LocalFraction::from_poly(Poly::parse(uv, "u"), {0, 0}), basis));
}
