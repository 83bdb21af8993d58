#include "ldef/versal/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldef {

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense invert(Dense a) {
    const size_t n = a.size();
    Dense inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && is_zero(a[p][c])) ++p;
        if (p == n) throw std::logic_error("singular system in the order-by-order solver");
        std::swap(a[p], a[c]);
        std::swap(inv[p], inv[c]);
        Rational s = 1 / a[c][c];
        for (size_t j = 0; j < n; ++j) {
            a[c][j] *= s;
            inv[c][j] *= s;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(a[r][c])) continue;
            Rational f = a[r][c];
            for (size_t j = 0; j < n; ++j) {
                a[r][j] -= f * a[c][j];
                inv[r][j] -= f * inv[c][j];
            }
        }
    }
    return inv;
}

// Collects, per monomial, the vector of coefficients of a list of series.
std::map<Exponents, std::vector<Rational>, SeriesOrder> by_monomial(const std::vector<TruncatedSeries>& v) {
    std::map<Exponents, std::vector<Rational>, SeriesOrder> out;
    for (size_t i = 0; i < v.size(); ++i)
        for (auto& [e, c] : v[i].terms()) {
            auto& row = out[e];
            if (row.empty()) row.assign(v.size(), 0);
            row[i] = c;
        }
    return out;
}

}  // namespace

MaurerCartanSolution solve_versal(const SlicePresentation& S, unsigned order) {
    if (order < 1) throw std::invalid_argument("order must be positive");
    MaurerCartanSolution sol;
    sol.order = order;
    sol.essential = S.essential;
    sol.params = S.essential_names();
    const size_t nv = S.free.size();
    std::vector<bool> is_h(nv, false);
    for (size_t c : S.essential) is_h[S.variable_of(c)] = true;
    std::vector<size_t> wvars;
    for (size_t v = 0; v < nv; ++v)
        if (!is_h[v]) wvars.push_back(v);

    auto lin = S.linear_parts();
    std::vector<size_t> rows;  // positions in lin
    {
        Echelon e;
        std::vector<size_t> wpos(nv, SIZE_MAX);
        for (size_t i = 0; i < wvars.size(); ++i) wpos[wvars[i]] = i;
        for (size_t r = 0; r < lin.size() && e.rank() < wvars.size(); ++r) {
            SparseVec proj;
            for (auto& [v, c] : lin[r].second)
                if (wpos[v] != SIZE_MAX) proj.emplace_back(wpos[v], c);
            std::sort(proj.begin(), proj.end());
            if (!proj.empty() && e.insert(proj, r)) rows.push_back(r);
        }
        if (e.rank() != wvars.size()) throw std::logic_error("linear part is not injective on the dependent coordinates");
    }
    Dense M(rows.size(), std::vector<Rational>(wvars.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < wvars.size(); ++j) M[i][j] = sparse_get(lin[rows[i]].second, wvars[j]);
    Dense Minv = invert(M);
    for (size_t r : rows) sol.equation_rows.push_back(lin[r].first);

    // H^3 representatives inside the span of the coordinates outside the equation rows.
    std::vector<size_t> Rsorted = sol.equation_rows;
    std::sort(Rsorted.begin(), Rsorted.end());
    auto in_R = [&](size_t i) { return std::binary_search(Rsorted.begin(), Rsorted.end(), i); };
    auto Z3 = S.ctx.complex->cohomology(3).Z_basis;
    std::vector<SparseVec> proj;
    for (auto& z : Z3) {
        SparseVec p;
        for (auto& [i, c] : z)
            if (in_R(i)) p.emplace_back(i, c);
        proj.push_back(p);
    }
    ColumnResult kr = analyze_columns(proj);
    Echelon hz;
    size_t tag = 0;
    for (auto& k : kr.kernel) {
        std::map<size_t, Rational> acc;
        for (auto& [j, c] : k)
            for (auto& [i, x] : Z3[j]) acc[i] += c * x;
        hz.insert(sparse_from_map(acc), tag++);
    }
    sol.obstruction_rows = hz.pivots();

    std::map<size_t, size_t> gen_index;
    std::vector<const Poly*> gens;
    for (auto& [k, p] : S.generators) {
        gen_index[k] = gens.size();
        gens.push_back(&p);
    }

    std::vector<TruncatedSeries> vals(nv);
    size_t hk = 0;
    for (size_t v = 0; v < nv; ++v)
        vals[v] = is_h[v] ? TruncatedSeries::variable(sol.params, order, hk++) : TruncatedSeries(sol.params, order);
    sol.obstruction.assign(sol.obstruction_rows.size(), TruncatedSeries(sol.params, order));

    unsigned zero_run = 0;
    for (unsigned p = 1; p <= order; ++p) {
        std::vector<TruncatedSeries> vp;
        for (auto& v : vals) vp.push_back(v.truncated(p));
        std::vector<TruncatedSeries> rhs;
        for (size_t r : rows) rhs.push_back(-evaluate_poly(*gens[r], vp).homogeneous_part(p));
        std::vector<TruncatedSeries> step(wvars.size(), TruncatedSeries(sol.params, order));
        bool any = false;
        for (auto& [e, b] : by_monomial(rhs))
            for (size_t i = 0; i < wvars.size(); ++i) {
                Rational x = 0;
                for (size_t j = 0; j < rows.size(); ++j)
                    if (!is_zero(b[j])) x += Minv[i][j] * b[j];
                if (!is_zero(x)) {
                    step[i].set_coefficient(e, x);
                    any = true;
                }
            }
        for (size_t i = 0; i < wvars.size(); ++i) vals[wvars[i]] += step[i];
        for (size_t i = 0; i < wvars.size(); ++i) vp[wvars[i]] = vals[wvars[i]].truncated(p);
        for (size_t q = 0; q < sol.obstruction_rows.size(); ++q) {
            auto it = gen_index.find(sol.obstruction_rows[q]);
            if (it == gen_index.end()) continue;
            TruncatedSeries part = evaluate_poly(*gens[it->second], vp).homogeneous_part(p);
            if (!part.is_zero()) any = true;
            TruncatedSeries lifted(sol.params, order);
            for (auto& [e, c] : part.terms()) lifted.set_coefficient(e, c);
            sol.obstruction[q] += lifted;
        }
        zero_run = any ? 0 : zero_run + 1;
    }
    for (size_t v : wvars) sol.g.emplace(S.free[v], vals[v]);
    sol.terminated = order >= 2 && zero_run >= 2;
    if (sol.terminated) {
        RingPtr P = make_ring(sol.params);
        std::map<size_t, Poly> sub;
        for (size_t v = 0; v < nv; ++v) sub.emplace(v, vals[v].to_poly(P));
        bool ok = true;
        for (auto* g : gens)
            if (!g->substitute(sub, P).is_zero()) ok = false;
        sol.exact = ok;
    }
    return sol;
}

TruncatedSeries MaurerCartanSolution::coordinate(const SlicePresentation& S, size_t idx) const {
    TruncatedSeries base = TruncatedSeries::constant(params, order, S.ctx.base_value(idx));
    auto it = g.find(idx);
    if (it != g.end()) return base + it->second;
    auto h = std::find(essential.begin(), essential.end(), idx);
    if (h != essential.end())
        return base + TruncatedSeries::variable(params, order, static_cast<size_t>(h - essential.begin()));
    return base;
}

DeformationSeries MaurerCartanSolution::deformation(const SlicePresentation& S) const {
    DeformationSeries d = trivial_deformation(S.ctx.algebra, params, order);
    for (size_t c : S.free)
        d.set_perturbation(c, coordinate(S, c) - TruncatedSeries::constant(params, order, S.ctx.base_value(c)));
    return d;
}

std::vector<size_t> gauge_complement(const SlicePresentation& S) {
    const auto& A = S.A.indices;
    std::vector<size_t> out;
    Echelon e;
    const CEComplex& C = *S.ctx.complex;
    for (size_t c : C.coordinates(1)) {
        SparseVec proj;
        for (auto& [i, x] : C.d_column(1, c))
            if (std::binary_search(A.begin(), A.end(), i)) proj.emplace_back(i, x);
        if (!proj.empty() && e.insert(proj, c)) out.push_back(c);
        if (e.rank() == A.size()) break;
    }
    return out;
}

NormalizedDeformation normalize_to_slice(const DeformationSeries& phi, const SlicePresentation& S) {
    if (!(phi.base == S.ctx.algebra)) throw std::invalid_argument("deformation and slice have different base points");
    const size_t m = phi.base.dim();
    const auto& A = S.A.indices;
    std::vector<size_t> W = gauge_complement(S);
    if (W.size() != A.size()) throw std::logic_error("gauge complement has the wrong size");
    const CEComplex& C = *S.ctx.complex;
    Dense M(A.size(), std::vector<Rational>(W.size(), 0));
    for (size_t j = 0; j < W.size(); ++j)
        for (auto& [i, x] : C.d_column(1, W[j])) {
            auto it = std::lower_bound(A.begin(), A.end(), i);
            if (it != A.end() && *it == i) M[static_cast<size_t>(it - A.begin())][j] = x;
        }
    Dense Minv = invert(M);
    CochainSpace s1(m, 1, m);
    GaugeTransform s = GaugeTransform::identity(m, phi.params, phi.order);
    for (unsigned p = 1; p <= phi.order; ++p) {
        DeformationSeries cur = gauge_act(s, phi);
        std::vector<TruncatedSeries> err;
        for (size_t a : A) err.push_back(cur.perturbation(a).homogeneous_part(p));
        std::vector<std::vector<TruncatedSeries>> L(m, std::vector<TruncatedSeries>(m, TruncatedSeries(phi.params, phi.order)));
        bool any = false;
        for (auto& [e, b] : by_monomial(err))
            for (size_t j = 0; j < W.size(); ++j) {
                Rational x = 0;
                for (size_t i = 0; i < A.size(); ++i)
                    if (!is_zero(b[i])) x += Minv[j][i] * b[i];
                if (is_zero(x)) continue;
                auto [I, o] = s1.at(W[j]);
                L[o][I[0]].set_coefficient(e, L[o][I[0]].coefficient(e) + x);
                any = true;
            }
        if (any) s = GaugeTransform::from_perturbation(L) * s;
    }
    return {s, gauge_act(s, phi)};
}

}  // namespace ldef
