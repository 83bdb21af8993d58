#include "ldef/lie/catalog.hpp"
#include "ldef/versal/rigidity.hpp"
#include "ldef/versal/solver.hpp"

#include <doctest.h>

#include <random>

using namespace ldef;

namespace {

DeformationContext graded_context(const GradedAlgebra& g) {
    return DeformationContext::make(g.algebra, g.weights.empty() ? std::nullopt : std::optional(g.torus()));
}

size_t coord(size_t n, size_t i, size_t j, size_t k) { return CochainSpace(n, 2, n).index({i - 1, j - 1}, k - 1); }

std::vector<size_t> standard_admissible(size_t n) {
    std::vector<size_t> A{coord(n, 2, 3, 5)};
    for (size_t k = 2; k < n; ++k) A.push_back(coord(n, 1, k, k + 1));
    std::sort(A.begin(), A.end());
    return A;
}

TruncatedSeries poly_series(const std::vector<std::string>& params, unsigned order, const std::string& text) {
    RingPtr r = make_ring(params);
    return TruncatedSeries::from_poly(Poly::parse(r, text), order);
}

// Law of the slice at a point of the eliminated presentation.
LieAlgebra slice_law(const SlicePresentation& S, const LinearElimination& E, const RationalVector& point) {
    LieAlgebra L(S.ctx.algebra.dim());
    CochainSpace s2(L.dim(), 2, L.dim());
    for (size_t c : S.ctx.coordinates()) {
        Rational v = S.ctx.base_value(c);
        std::string name = S.ctx.coordinate_name(c);
        if (auto it = E.values.find(name); it != E.values.end())
            v += it->second.evaluate(point);
        else if (auto idx = E.ring->index_of(name))
            v += point[*idx];
        auto [t, k] = s2.at(c);
        if (!is_zero(v)) L.set(t[0], t[1], k, v);
    }
    return L;
}

// Another admissible set obtained by exchanging one coordinate, when one exists.
std::optional<std::vector<size_t>> exchanged_admissible(const SlicePresentation& S) {
    for (size_t a : S.A.indices)
        for (size_t b : S.free) {
            std::vector<size_t> cand;
            for (size_t x : S.A.indices)
                if (x != a) cand.push_back(x);
            cand.push_back(b);
            std::sort(cand.begin(), cand.end());
            if (check_admissible(S.ctx, cand).admissible) return cand;
        }
    return std::nullopt;
}

}  // namespace

TEST_CASE("admissible sets have dim B^2 elements") {
    for (size_t n = 5; n <= 11; ++n) {
        auto ctx = graded_context(f_family(n));
        auto A = admissible_set(ctx);
        CHECK(A.indices.size() == n - 1);
        CHECK(A.dim_B2 == ctx.complex->cohomology(2).dim_B);
        CHECK(check_admissible(ctx, standard_admissible(n)).admissible);
    }
    auto ab = graded_context(abelian(3));
    CHECK(admissible_set(ab).indices.empty());
    auto s = sl2();
    auto sl = DeformationContext::make(s.algebra);
    CHECK(admissible_set(sl).indices.size() == 6);
    CHECK(admissible_set(sl).indices.size() == sl.complex->cohomology(2).dim_B);
}

TEST_CASE("non-admissible sets are rejected") {
    auto ctx = graded_context(f_family(8));
    auto A = standard_admissible(8);
    auto short_set = A;
    short_set.pop_back();
    CHECK_FALSE(check_admissible(ctx, short_set).admissible);
    // X3_4_7 vanishes at f8, so no coboundary reaches it.
    auto bad = A;
    bad.erase(std::find(bad.begin(), bad.end(), coord(8, 2, 3, 5)));
    bad.push_back(coord(8, 3, 4, 7));
    std::sort(bad.begin(), bad.end());
    CHECK_FALSE(check_admissible(ctx, bad).admissible);
    CHECK_THROWS_AS(slice_presentation(ctx, AdmissibleSet{bad, 7, true}), std::invalid_argument);
}

TEST_CASE("slice tangent space is H^2") {
    std::vector<GradedAlgebra> cases;
    for (size_t n = 5; n <= 12; ++n) cases.push_back(f_family(n));
    cases.push_back(witt(8));
    cases.push_back(heisenberg());
    cases.push_back(abelian(2));
    cases.push_back(sl2());
    for (auto& g : cases) {
        auto ctx = graded_context(g);
        auto S = slice_presentation(ctx);
        CHECK(S.tangent_dim == ctx.complex->cohomology(2).dim_H);
        CHECK(S.essential.size() == S.tangent_dim);
        RationalVector origin(S.ring->nvars(), 0);
        for (auto& p : S.generator_list()) CHECK(is_zero(p.evaluate(origin)));
    }
}

TEST_CASE("f8 versal deformation terminates") {
    auto ctx = graded_context(f_family(8));
    auto S = slice_presentation(ctx, AdmissibleSet{standard_admissible(8), 7, true});
    auto sol = solve_versal(S, 6);
    REQUIRE(sol.params == std::vector<std::string>{"X3_4_7"});
    CHECK(sol.obstruction.empty());
    CHECK(sol.terminated);
    CHECK(sol.exact);
    CHECK(sol.coordinate(S, coord(8, 2, 6, 8)) == poly_series(sol.params, 6, "1 - 2*X3_4_7"));
    CHECK(sol.coordinate(S, coord(8, 3, 5, 8)) == poly_series(sol.params, 6, "X3_4_7"));
    CHECK(sol.coordinate(S, coord(8, 2, 5, 7)) == poly_series(sol.params, 6, "1 - X3_4_7"));
    CHECK(sol.deformation(S).satisfies_jacobi());
}

TEST_CASE("f9 versal series match the closed fractions") {
    auto ctx = graded_context(f_family(9));
    auto S = slice_presentation(ctx);
    auto sol = solve_versal(S, 4);
    REQUIRE(sol.params.size() == 1);
    CHECK(sol.obstruction.empty());
    CHECK_FALSE(sol.terminated);
    RingPtr t = make_ring(sol.params);
    auto frac = [&](const std::string& num, const std::string& den) {
        return series_expand(LocalFraction(Poly::parse(t, num), Poly::parse(t, den), {0}), 4);
    };
    CHECK(sol.coordinate(S, coord(9, 2, 7, 9)) == frac("2 - 5*X3_4_7", "2 + X3_4_7"));
    CHECK(sol.coordinate(S, coord(9, 4, 5, 9)) == frac("3*X3_4_7^2", "2 + X3_4_7"));
    CHECK(sol.coordinate(S, coord(9, 3, 6, 9)) == frac("2*X3_4_7 - 2*X3_4_7^2", "2 + X3_4_7"));
    CHECK(sol.deformation(S).satisfies_jacobi());
}

TEST_CASE("abelian K^2 versal deformation is unobstructed") {
    auto ctx = graded_context(abelian(2));
    auto S = slice_presentation(ctx);
    CHECK(S.generators.empty());
    CHECK(S.free.size() == 2);
    auto sol = solve_versal(S, 2);
    CHECK(sol.params.size() == 2);
    CHECK(sol.g.empty());
    CHECK(sol.obstruction.empty());
}

TEST_CASE("normalize_to_slice inverts W^1 gauges") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-3, 3);
    int cases = 0;
    for (size_t n : {7, 8, 9}) {
        auto ctx = graded_context(f_family(n));
        auto S = slice_presentation(ctx);
        auto psi = solve_versal(S, 2).deformation(S);
        auto W = gauge_complement(S);
        REQUIRE_FALSE(W.empty());
        CochainSpace s1(n, 1, n);
        for (int rep = 0; rep < (n == 9 ? 18 : 16); ++rep, ++cases) {
            std::vector<std::vector<TruncatedSeries>> L(n, std::vector<TruncatedSeries>(n, psi.zero()));
            for (size_t w : W) {
                auto [t, k] = s1.at(w);
                TruncatedSeries e = psi.zero();
                e.set_coefficient({1}, coef(rng));
                e.set_coefficient({2}, coef(rng));
                L[k][t[0]] = e;
            }
            auto s = GaugeTransform::from_perturbation(L);
            auto phi = gauge_act(s, psi);
            CHECK(phi.satisfies_jacobi());
            auto res = normalize_to_slice(phi, S);
            CHECK(res.output == psi);
            CHECK(gauge_act(res.gauge, phi) == res.output);
        }
    }
    CHECK(cases == 50);
}

TEST_CASE("a first-order coboundary direction on f7 is removed") {
    auto ctx = graded_context(f_family(7));
    auto S = slice_presentation(ctx);
    auto psi = solve_versal(S, 2).deformation(S);
    auto W = gauge_complement(S);
    REQUIRE_FALSE(W.empty());
    // s = id + t E with E the elementary map of a W^1 coordinate; to first order s * psi = psi - t dE.
    CochainSpace s1(7, 1, 7);
    auto [t, k] = s1.at(W.front());
    std::vector<std::vector<TruncatedSeries>> L(7, std::vector<TruncatedSeries>(7, psi.zero()));
    L[k][t[0]] = TruncatedSeries::variable(psi.params, 2, 0);
    auto phi = gauge_act(GaugeTransform::from_perturbation(L), psi);
    SparseVec dE = ctx.complex->d_column(1, W.front());
    bool moved = false;
    for (auto& [idx, c] : dE) {
        Rational first = phi.perturbation(idx).coefficient({1}) - psi.perturbation(idx).coefficient({1});
        CHECK(first == -c);
        if (std::binary_search(S.A.indices.begin(), S.A.indices.end(), idx)) moved = true;
    }
    CHECK(moved);
    auto res = normalize_to_slice(phi, S);
    for (size_t a : S.A.indices) CHECK(res.output.perturbation(a).is_zero());
    CHECK(res.output == psi);
}

TEST_CASE("a slice deformation normalizes by the identity") {
    auto ctx = graded_context(f_family(9));
    auto S = slice_presentation(ctx);
    auto psi = solve_versal(S, 3).deformation(S);
    auto res = normalize_to_slice(psi, S);
    CHECK(res.gauge.is_identity());
    CHECK(res.output == psi);
}

TEST_CASE("rigidity along the f family") {
    for (size_t n : {5, 6}) {
        auto R = rigidity_test(slice_presentation(graded_context(f_family(n))));
        CHECK(R.verdict == Verdict::Rigid);
        CHECK(R.k_dimension.value == 1);
        CHECK(R.elimination.ring->nvars() == 0);
    }
    for (size_t n : {7, 9, 10, 11}) {
        auto R = rigidity_test(slice_presentation(graded_context(f_family(n))));
        CHECK(R.verdict == Verdict::NotRigid);
        CHECK_FALSE(R.krull_zero);
    }
    auto R = rigidity_test(slice_presentation(graded_context(f_family(12))));
    CHECK(R.verdict == Verdict::Rigid);
    CHECK(R.k_dimension.finite());
    CHECK(R.k_dimension.value == 5);
    REQUIRE(R.elimination.generators.size() == 1);
    RingPtr t = R.elimination.ring;
    CHECK(R.elimination.generators[0] == Poly::parse(t, "10*X3_4_7^6 - X3_4_7^5"));
}

TEST_CASE("the Witt point of the f12 slice") {
    auto S = slice_presentation(graded_context(f_family(12)));
    auto E = eliminate_slice(S);
    RationalVector point{Rational(1, 10)};
    for (auto& g : E.generators) CHECK(is_zero(g.evaluate(point)));
    auto R = rigidity_at(E, point);
    CHECK(R.verdict == Verdict::Rigid);
    CHECK(R.k_dimension.value == 1);
    LieAlgebra L = slice_law(S, E, point);
    CHECK(check_jacobi(L).empty());
    // Diagonal gauge s_1 = 1, s_2 = 6, s_{k+1} = (k - 1) s_k turns [e1, ek] = e_{k+1}, [e2, e3] = e5 into Witt form.
    std::vector<Rational> s(12);
    s[0] = 1;
    s[1] = 6;
    for (size_t k = 2; k < 12; ++k) s[k] = Rational(static_cast<long>(k) - 1) * s[k - 1];
    LieAlgebra gauged(12);
    for (auto& [key, c] : L.constants()) gauged.set(key[0], key[1], key[2], s[key[2]] / (s[key[0]] * s[key[1]]) * c);
    CHECK(gauged == witt(12).algebra);
}

TEST_CASE("rigidity verdicts do not depend on the admissible set") {
    for (size_t n : {8, 9, 12}) {
        auto ctx = graded_context(f_family(n));
        auto S1 = slice_presentation(ctx);
        auto other = exchanged_admissible(S1);
        REQUIRE(other);
        CHECK(*other != S1.A.indices);
        auto S2 = slice_presentation(ctx, AdmissibleSet{*other, S1.A.dim_B2, true});
        CHECK(S2.tangent_dim == S1.tangent_dim);
        auto R1 = rigidity_test(S1), R2 = rigidity_test(S2);
        CHECK(R1.verdict == R2.verdict);
        CHECK(R1.krull_zero == R2.krull_zero);
        CHECK(R1.k_dimension.kind == R2.k_dimension.kind);
        if (R1.k_dimension.finite()) CHECK(R1.k_dimension.value == R2.k_dimension.value);
    }
}
