#include "ldef/algebra/primes.hpp"
#include "ldef/graded/filiation.hpp"
#include "ldef/lie/catalog.hpp"
#include "ldef/lie/cohomology.hpp"
#include "ldef/versal/rigidity.hpp"

#include <doctest.h>

#include <random>

using namespace ldef;

namespace {

Weight w(std::initializer_list<int> v) {
    Weight out;
    for (int x : v) out.push_back(Rational(x));
    return out;
}

const FiliationRun& f_run() {
    static const FiliationRun run = filiation_run(f_family(5).algebra, f_family_path(15), 15);
    return run;
}

const FiliationRun& e52_run() {
    static const FiliationRun run = example52_run();
    return run;
}

const GradedFamily& f_at(size_t n) { return f_run().families.at(n - 5); }

LocalFraction X(const GradedFamily& F, size_t i, size_t j) { return F.value(i - 1, j - 1); }

LocalFraction frac(const GradedFamily& F, const std::string& num, const std::string& den = "1") {
    RationalVector o(F.ring->nvars(), 0);
    return LocalFraction(Poly::parse(F.ring, num), Poly::parse(F.ring, den), o);
}

// (k-th power of t at the coefficient) for a series in one parameter.
TruncatedSeries t_series(const GradedFamily& F, const std::vector<Rational>& c) {
    TruncatedSeries s(F.parameters(), 4);
    for (size_t e = 0; e < c.size(); ++e) s.set_coefficient(Exponents{unsigned(e)}, c[e]);
    return s;
}

// dim H_2(L)_beta by dense ranks of the bracket map and of the boundary of the weight-beta triples.
size_t h2_oracle(const LieAlgebra& L, const std::vector<Weight>& weights, const Weight& beta) {
    const size_t n = L.dim();
    auto add = [](const Weight& a, const Weight& b) {
        Weight s(a.size());
        for (size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        return s;
    };
    std::vector<std::pair<size_t, size_t>> wedges;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (add(weights[a], weights[b]) == beta) wedges.emplace_back(a, b);
    auto wedge_pos = [&](size_t a, size_t b, Rational& sign) -> long {
        sign = 1;
        if (a > b) std::swap(a, b), sign = -1;
        for (size_t p = 0; p < wedges.size(); ++p)
            if (wedges[p] == std::pair(a, b)) return long(p);
        return -1;
    };
    std::vector<std::vector<Rational>> bracket_rows;
    for (auto [a, b] : wedges) {
        std::vector<Rational> row(n, 0);
        for (auto& [k, c] : L.bracket(a, b)) row[k] = c;
        bracket_rows.push_back(row);
    }
    size_t image = dense_rank(bracket_rows);
    std::vector<std::vector<Rational>> boundary;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                if (add(add(weights[a], weights[b]), weights[c]) != beta) continue;
                std::vector<Rational> row(wedges.size(), 0);
                const size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                for (auto& t : cyc)
                    for (auto& [l, v] : L.bracket(t[0], t[1])) {
                        if (l == t[2]) continue;
                        Rational s;
                        long p = wedge_pos(l, t[2], s);
                        REQUIRE(p >= 0);
                        row[size_t(p)] += s * v;
                    }
                boundary.push_back(row);
            }
    return wedges.size() - image - dense_rank(boundary);
}

}  // namespace

TEST_CASE("weight path validation") {
    PathValidation f = validate_weight_path(f_family_path(15));
    CHECK(f.valid());
    CHECK(f.spans);
    CHECK(f.positive);
    CHECK(f.non_difference);
    CHECK(f.strata == "unchecked");
    CHECK(f_family_path(15).n0 == 5);
    CHECK(f_family_path(15).simple);

    WeightPath bad{2, {w({1, 0}), w({0, 1}), w({-1, 1})}, 2, true};
    PathValidation b = validate_weight_path(bad);
    CHECK_FALSE(b.non_difference);
    CHECK(b.difference_failure == 3);
    CHECK_FALSE(b.valid());

    WeightPath e = example52_path();
    CHECK(e.n0 == 4);
    CHECK(e.rank == 4);
    CHECK(e.length() == 13);
    CHECK(validate_weight_path(e).valid());

    WeightPath dup{1, {w({1}), w({2}), w({3}), w({3})}, 2, true};
    PathValidation d = validate_weight_path(dup);
    CHECK_FALSE(d.distinct);
    CHECK_FALSE(d.valid());

    // Nonpositive weights have no witness.
    CHECK_FALSE(positivity_witness({w({1, 0}), w({-1, 0})}));
    auto t = positivity_witness(e.weights);
    REQUIRE(t);
    for (auto& a : e.weights) {
        Rational s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i] * (*t)[i];
        CHECK(s > 0);
    }
}

TEST_CASE("strata along the constructed filiations") {
    const GradedFamily& F15 = f_at(15);
    LieAlgebra f15 = F15.base();
    PathValidation f = validate_weight_path(f_family_path(15), &f15);
    CHECK(F15.base() == f_family(15).algebra);
    CHECK(f.strata == "holds");
    CHECK(f.valid());
    LieAlgebra e13 = e52_run().families.back().base();
    CHECK(validate_weight_path(example52_path(), &e13).strata == "holds");
}

TEST_CASE("graded Jacobi system") {
    GradedJacobiSystem s6 = graded_jacobi_system(f_family_path(6), 6);
    CHECK(s6.ring->nvars() == 6);
    REQUIRE(s6.polynomials.size() == 1);
    CHECK(s6.polynomials[0] == Poly::parse(s6.ring, "X1_3*X2_4 - X2_3*X1_5"));

    GradedJacobiSystem a = graded_jacobi_system(example52_path(), 4);
    CHECK(a.ring->nvars() == 0);
    CHECK(a.polynomials.empty());

    // The triples summing to the last weight all pair two generators with the complementary sum.
    GradedJacobiSystem e = graded_jacobi_system(example52_path(), 13);
    size_t top = 0;
    for (auto& t : e.index.triples)
        if (t.h == 12) {
            ++top;
            CHECK(t.i < 4);
            CHECK(t.j < 4);
            CHECK(t.k >= 4);
        }
    CHECK(top == 5);
    const ExtensionFiberReport& last = e52_run().steps.back();
    CHECK(last.relations.size() == 5);
}

TEST_CASE("Jacobi ideal grows by the new polynomials only") {
    auto check_step = [](const WeightPath& path, size_t n) {
        GradedJacobiSystem a = graded_jacobi_system(path, n);
        GradedJacobiSystem b = graded_jacobi_system(path, n + 1);
        std::vector<Poly> rhs;
        for (auto& p : a.polynomials) {
            // Same names, larger ring.
            std::map<size_t, Poly> sub;
            for (size_t v = 0; v < a.ring->nvars(); ++v)
                sub[v] = Poly::variable(b.ring, *b.ring->index_of(a.ring->name(v)));
            rhs.push_back(p.substitute(sub, b.ring));
        }
        for (size_t t = 0; t < b.index.triples.size(); ++t)
            if (b.index.triples[t].h == n) rhs.push_back(b.polynomials[t]);
        GroebnerResult gl = groebner_basis(b.polynomials);
        GroebnerResult gr = groebner_basis(rhs);
        REQUIRE(gl.complete);
        REQUIRE(gr.complete);
        for (auto& p : rhs) CHECK(reduces_to_zero(p, gl.basis));
        for (auto& p : b.polynomials) CHECK(reduces_to_zero(p, gr.basis));
    };
    check_step(f_family_path(9), 7);
    check_step(f_family_path(9), 8);
    check_step(example52_path(), 9);
}

TEST_CASE("weight-space homology") {
    LieAlgebra ab = abelian(4).algebra;
    WeightPath path = example52_path();
    std::vector<Weight> e4(path.weights.begin(), path.weights.begin() + 4);
    WeightHomology h = h2_weight_space(ab, e4, w({1, 1, 0, 0}));
    CHECK(h.dim == 1);
    CHECK(h.wedge_dim == 1);
    CHECK(h.boundary_rank == 0);

    GradedAlgebra f11 = f_family(11);
    CHECK(h2_weight_space(f11.algebra, f11.weights, w({12})).dim == 1);

    for (size_t n = 5; n <= 12; ++n) {
        GradedAlgebra g = f_family(n);
        for (int b = 2; b <= int(n) + 2; ++b) {
            WeightHomology x = h2_weight_space(g.algebra, g.weights, w({b}));
            CHECK(x.dim == h2_oracle(g.algebra, g.weights, w({b})));
            CHECK(x.dim == x.kernel_dim - x.boundary_rank);
            CHECK(x.basis.size() == x.dim);
        }
    }

    // A nonzero extension class cuts a hyperplane in the weight space of its own weight.
    for (size_t n = 6; n <= 12; ++n) {
        GradedAlgebra big = f_family(n), small = f_family(n - 1);
        Weight beta = big.weights.back();
        std::vector<Weight> ws(big.weights.begin(), big.weights.end() - 1);
        CHECK(h2_weight_space(big.algebra, big.weights, beta).dim + 1 == h2_weight_space(small.algebra, ws, beta).dim);
    }
    const auto& fam = e52_run().families;
    for (size_t a = 1; a < fam.size(); ++a) {
        Weight beta = fam[a].weights.back();
        CHECK(h2_weight_space(fam[a].base(), fam[a].weights, beta).dim + 1 ==
              h2_weight_space(fam[a - 1].base(), fam[a - 1].weights, beta).dim);
    }
}

TEST_CASE("open stratum") {
    StratumReport f5 = stratum_check(f_family(5).algebra, f_family(5).weights);
    CHECK(f5.in_open_stratum);
    CHECK(f5.der_T_dim == 1);
    CHECK(f5.torus_dim == 1);

    StratumReport ab = stratum_check(abelian(3).algebra, {w({1}), w({2}), w({4})});
    CHECK_FALSE(ab.in_open_stratum);
    CHECK(ab.der_T_dim == 3);
    CHECK(ab.torus_dim == 1);

    CHECK(stratum_check(witt(12).algebra, witt(12).weights).in_open_stratum);
    for (auto& F : e52_run().families) CHECK(stratum_check(F.base(), F.weights).in_open_stratum);
}

TEST_CASE("diagonal gauge reaches any nonzero admissible values") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(1, 9), sgn(0, 1);
    for (size_t n : {7, 9, 11, 12}) {
        const GradedFamily& F = f_at(n);
        for (int rep = 0; rep < 5; ++rep) {
            RationalVector p(F.ring->nvars(), 0);
            if (n < 12 && !p.empty()) p[0] = make_rational(num(rng), 10);
            LieAlgebra L = F.law_at(p);
            std::vector<Rational> target;
            for (size_t a = 0; a < F.admissible.size(); ++a)
                target.push_back(make_rational(sgn(rng) ? num(rng) : -num(rng), num(rng)));
            auto s = diagonal_normalization(L, F.admissible, target);
            CAPTURE(n);
            CAPTURE(rep);
            REQUIRE(s);
            LieAlgebra M = diagonal_act(L, *s);
            for (size_t a = 0; a < F.admissible.size(); ++a) {
                const GradedPair& q = F.admissible[a];
                CHECK(M.get(q.i, q.j, q.k) == target[a]);
            }
            CHECK(check_jacobi(M).empty());
        }
    }
}

TEST_CASE("graded laws along positive simple paths are nilpotent") {
    for (size_t n = 7; n <= 11; ++n)
        for (int a : {1, 3, -5, 7})
            CHECK(is_nilpotent(f_at(n).law_at({make_rational(a, 11)})));
    const GradedFamily& E = e52_run().families.back();
    for (int a : {1, -2, 5}) {
        CHECK(is_nilpotent(E.law_at({make_rational(a, 3), 0})));
        CHECK(is_nilpotent(E.law_at({0, make_rational(a, 3)})));
    }
}

TEST_CASE("f-family filiation through dimension 11") {
    const FiliationRun& run = f_run();
    CHECK_FALSE(run.halted);
    REQUIRE(run.families.size() == 11);
    for (size_t n : {5, 6}) {
        const GradedFamily& F = f_at(n);
        CHECK(F.parameters().empty());
        CHECK(F.generators.empty());
        CHECK(F.base() == f_family(n).algebra);
        RigidityReport r = rigidity_at(F.presentation(), {});
        CHECK(r.verdict == Verdict::Rigid);
        CHECK(r.k_dimension.value == 1);
    }
    CHECK(X(f_at(6), 2, 4) == frac(f_at(6), "1"));
    CHECK(X(f_at(6), 1, 5) == frac(f_at(6), "1"));

    for (size_t n = 7; n <= 11; ++n) {
        const GradedFamily& F = f_at(n);
        REQUIRE(F.parameters() == std::vector<std::string>{"X3_4"});
        CHECK(F.generators.empty());
        CHECK(F.base() == f_family(n).algebra);
        CHECK(rigidity_at(F.presentation(), {0}).verdict == Verdict::NotRigid);
    }
    const GradedFamily& F7 = f_at(7);
    CHECK(X(F7, 3, 4) == frac(F7, "X3_4"));
    CHECK(X(F7, 2, 5) == frac(F7, "1 - X3_4"));
    CHECK(X(F7, 1, 6) == frac(F7, "1"));

    const GradedFamily& F8 = f_at(8);
    CHECK(X(F8, 1, 7) == frac(F8, "1"));
    CHECK(X(F8, 2, 6) == frac(F8, "1 - 2*X3_4"));
    CHECK(X(F8, 3, 5) == frac(F8, "X3_4"));

    const GradedFamily& F9 = f_at(9);
    CHECK(X(F9, 1, 8) == frac(F9, "1"));
    CHECK(X(F9, 2, 7) == frac(F9, "2 - 5*X3_4", "2 + X3_4"));
    CHECK(X(F9, 3, 6) == frac(F9, "2*X3_4 - 2*X3_4^2", "2 + X3_4"));
    CHECK(X(F9, 4, 5) == frac(F9, "3*X3_4^2", "2 + X3_4"));

    const GradedFamily& F10 = f_at(10);
    CHECK(X(F10, 1, 9) == frac(F10, "1"));
    CHECK(X(F10, 2, 8) == frac(F10, "2 - 7*X3_4 + 5*X3_4^2", "2 + X3_4"));
    CHECK(X(F10, 3, 7) == frac(F10, "2*X3_4 - 5*X3_4^2", "2 + X3_4"));
    CHECK(X(F10, 4, 6) == frac(F10, "3*X3_4^2", "2 + X3_4"));

    const GradedFamily& F11 = f_at(11);
    const std::string d = "2*(2 + X3_4)*(1 - X3_4^2)";
    CHECK(X(F11, 1, 10) == frac(F11, "1"));
    CHECK(X(F11, 2, 9) == frac(F11, "2 - 10*X3_4 + 16*X3_4^2 - 5*X3_4^3", "2*(1 - X3_4^2)"));
    CHECK(X(F11, 3, 8) == frac(F11, "4*X3_4 - 16*X3_4^2 + 8*X3_4^3 - 5*X3_4^4", d));
    CHECK(X(F11, 4, 7) == frac(F11, "6*X3_4^2 - 12*X3_4^3 + 15*X3_4^4", d));
    CHECK(X(F11, 5, 6) == frac(F11, "12*X3_4^3 - 21*X3_4^4", d));
}

TEST_CASE("f-family at dimension 12: branch point and Witt companion") {
    const GradedFamily& F = f_at(12);
    REQUIRE(F.generators.size() == 1);
    RationalVector o{0};
    CHECK(LocalFraction::from_poly(F.generators[0], o)
              .associate_of(LocalFraction::from_poly(Poly::parse(F.ring, "X3_4^5*(10*X3_4 - 1)"), o)));
    const std::string d = "2*(2 + X3_4)*(1 - X3_4^2)";
    CHECK(X(F, 2, 10) == frac(F, "4 - 22*X3_4 + 44*X3_4^2 - 26*X3_4^3 + 36*X3_4^4", d));
    CHECK(X(F, 3, 9).equal_modulo(frac(F, "4*X3_4 - 22*X3_4^2 + 32*X3_4^3 - 41*X3_4^4", d), F.generators));
    CHECK(X(F, 4, 8) == frac(F, "6*X3_4^2 - 24*X3_4^3 + 36*X3_4^4", d));
    CHECK(X(F, 5, 7).equal_modulo(frac(F, "12*X3_4^3 - 21*X3_4^4", d), F.generators));

    RigidityReport r0 = rigidity_at(F.presentation(), o);
    CHECK(r0.verdict == Verdict::Rigid);
    CHECK(r0.k_dimension.value == 5);
    CHECK(local_nilpotency_order(F.quotient(), Poly::variable(F.ring, 0), 10) == 5);
    RigidityReport r1 = rigidity_at(F.presentation(), {Rational(1, 10)});
    CHECK(r1.verdict == Verdict::Rigid);
    CHECK(r1.k_dimension.value == 1);

    // The point t = 1/10 is the Witt law up to a diagonal gauge, for every n >= 12.
    for (size_t n = 12; n <= 15; ++n) {
        LieAlgebra L = f_at(n).law_at({Rational(1, 10)});
        LieAlgebra W = witt(n).algebra;
        std::vector<Rational> target;
        for (auto& q : f_at(n).admissible) target.push_back(W.get(q.i, q.j, q.k));
        auto s = diagonal_normalization(L, f_at(n).admissible, target);
        REQUIRE(s);
        CHECK(diagonal_act(L, *s) == W);
    }
}

TEST_CASE("f-family closed forms for 13 <= n <= 15 modulo t^5") {
    for (size_t n = 13; n <= 15; ++n) {
        const GradedFamily& F = f_at(n);
        REQUIRE(F.parameters() == std::vector<std::string>{"X3_4"});
        REQUIRE(F.generators.size() == 1);
        CHECK(LocalFraction::from_poly(F.generators[0], {0})
                  .associate_of(LocalFraction::from_poly(Poly::parse(F.ring, "X3_4^5*(10*X3_4 - 1)"), {0})));
        auto ser = [&](size_t i, size_t j) { return series_expand(X(F, i, j), 4); };
        auto eq = [&](size_t i, size_t j, std::vector<Rational> c) {
            CAPTURE(n);
            CAPTURE(i);
            CAPTURE(j);
            CHECK(ser(i, j).to_string() == t_series(F, c).to_string());
        };
        eq(2, 4, {1});
        eq(2, 5, {1, -1});
        eq(2, 6, {1, -2});
        eq(3, 4, {0, 1});
        eq(3, 5, {0, 1});
        eq(3, 6, {0, 1, Rational(-3, 2), Rational(3, 4), Rational(-3, 8)});
        eq(3, 7, {0, 1, -3, Rational(3, 2), Rational(-3, 4)});
        eq(4, 5, {0, 0, Rational(3, 2), Rational(-3, 4), Rational(3, 8)});
        eq(4, 6, {0, 0, Rational(3, 2), Rational(-3, 4), Rational(3, 8)});
        eq(5, 6, {0, 0, 0, 3, Rational(-27, 4)});
        eq(5, 7, {0, 0, 0, 3, Rational(-27, 4)});
        for (long m = 9; m <= long(n); ++m) {
            eq(2, size_t(m - 2), {1, Rational(6 - m), make_rational(3 * m * m - 45 * m + 168, 4),
                                  make_rational(-4 * m * m * m + 105 * m * m - 923 * m + 2712, 8),
                                  make_rational(5 * m * m * m * m - 192 * m * m * m + 2812 * m * m - 18579 * m + 46608, 16)});
            if (m >= 11) {
                eq(3, size_t(m - 3), {0, 1, make_rational(3 * (8 - m), 2), make_rational(6 * m * m - 111 * m + 516, 4),
                                      make_rational(-10 * m * m * m + 303 * m * m - 3110 * m + 10794, 8)});
                eq(4, size_t(m - 4), {0, 0, Rational(3, 2), make_rational(-12 * m + 117, 4),
                                      make_rational(30 * m * m - 636 * m + 3423, 8)});
            }
            if (m >= 12) eq(5, size_t(m - 5), {0, 0, 0, 3, make_rational(-30 * m + 333, 4)});
            if (m >= 13) eq(6, size_t(m - 6), {0, 0, 0, 0, Rational(15, 2)});
        }
        for (size_t i = 7; i <= n; ++i)
            for (size_t j = i + 1; i + j <= n; ++j) eq(i, j, {});
    }
}

TEST_CASE("fiber cases along the f-family") {
    const FiliationRun& run = f_run();
    REQUIRE(run.steps.size() == 10);
    for (size_t s = 0; s < run.steps.size(); ++s) {
        const ExtensionFiberReport& r = run.steps[s];
        const GradedFamily& before = run.families[s];
        CHECK(r.n == s + 5);
        CHECK(r.nu == h2_weight_space(before.base(), before.weights, r.beta).dim);
        CHECK(r.nu == r.fiber_dim);
        CHECK(r.nu >= 1);
        if (r.nu == 1) CHECK(r.kind == FiberCase::Unique);
        if (r.nu > 1) CHECK(r.kind == FiberCase::Parametric);
        CHECK(r.new_parameters.size() == r.nu - 1);
        CHECK(r.nu == (r.n == 6 ? 2u : 1u));
        REQUIRE(r.pivot);
        CHECK(r.pivot->k == r.n);
        // The admissible sets nest, growing by the pivot.
        std::vector<GradedPair> grown = before.admissible;
        grown.push_back(*r.pivot);
        std::sort(grown.begin(), grown.end());
        std::vector<GradedPair> next = run.families[s + 1].admissible;
        std::sort(next.begin(), next.end());
        CHECK(next == grown);
    }
}

TEST_CASE("family slices use admissible sets") {
    for (size_t n = 5; n <= 11; ++n) {
        const GradedFamily& F = f_at(n);
        SlicePresentation S = family_slice(F);
        CHECK(check_admissible(S.ctx, S.A.indices).admissible);
        CHECK(S.A.indices.size() == F.admissible.size());
        DerivationSet T = F.torus();
        CHECK(S.tangent_dim == cohomology(F.base(), 2, &T).dim_H);
    }
}

TEST_CASE("four-generator example to dimension 13") {
    const FiliationRun& run = e52_run();
    CHECK_FALSE(run.halted);
    REQUIRE(run.families.size() == 10);
    const GradedFamily& F = run.families.back();
    CHECK(F.dim() == 13);
    CHECK(F.parameters() == std::vector<std::string>{"X1_7", "X4_10"});
    REQUIRE(F.generators.size() == 1);
    CHECK(F.generators[0] == Poly::parse(F.ring, "X1_7*X4_10"));
    CHECK(check_jacobi(F.base()).empty());

    size_t parametric = 0;
    for (auto& s : run.steps) {
        CHECK(s.nu == s.fiber_dim);
        CHECK(s.new_parameters.size() == s.nu - 1);
        if (s.nu > 1) {
            ++parametric;
            CHECK(s.kind == FiberCase::Parametric);
        }
    }
    CHECK(parametric == 2);

    // Normalized constants.
    CHECK(X(F, 1, 8) == frac(F, "-1"));
    CHECK(X(F, 1, 9) == frac(F, "-1"));
    CHECK(X(F, 2, 6) == frac(F, "X1_7 + 1"));
    CHECK(X(F, 5, 9) == frac(F, "1"));
    CHECK(X(F, 3, 11).equal_modulo(frac(F, "X4_10 - 1"), F.generators));
    CHECK(X(F, 6, 8).equal_modulo(frac(F, "X4_10 - 1"), F.generators));

    DerivationSet T = F.torus();
    CHECK(cohomology(F.base(), 2, &T).dim_H == 2);
    CHECK(cohomology(F.law_at({1, 0}), 2, &T).dim_H == 1);
    CHECK(cohomology(F.law_at({Rational(-3, 2), 0}), 2, &T).dim_H == 1);
    CHECK(rigidity_at(F.presentation(), {0, 0}).verdict == Verdict::NotRigid);
}

TEST_CASE("monomial primes of the four-generator slice ring") {
    const GradedFamily& F = e52_run().families.back();
    std::vector<MonomialPrime> primes = monomial_primes(F.quotient(), 3);
    std::vector<std::string> names;
    for (auto& p : primes) {
        std::vector<std::string> gs;
        for (auto& g : p.generators) gs.push_back(g.to_string());
        std::sort(gs.begin(), gs.end());
        std::string s;
        for (auto& g : gs) s += (s.empty() ? "" : ",") + g;
        names.push_back(s);
    }
    std::sort(names.begin(), names.end());
    CHECK(names.size() == 3);
    CHECK(names == std::vector<std::string>{"X1_7", "X1_7,X4_10", "X4_10"});
    for (auto& p : primes) CHECK(p.maximal == (p.generators.size() == 2));

    RingPtr r = make_ring({"x", "y"});
    QuotientPresentation q = make_quotient(r, {Poly::parse(r, "x^2")}, {0, 0});
    auto qp = monomial_primes(q, 3);
    REQUIRE(qp.size() == 2);
}
