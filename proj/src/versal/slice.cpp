#include "ldef/versal/slice.hpp"

#include "ldef/lie/scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldef {

DeformationContext DeformationContext::make(const LieAlgebra& L, std::optional<DerivationSet> torus) {
    if (torus && !torus->empty() && !torus->is_diagonal())
        throw std::invalid_argument("the deformation problem supports diagonal tori only");
    if (torus && torus->empty()) torus.reset();
    DeformationContext c;
    c.algebra = L;
    c.torus = torus;
    c.complex = std::make_shared<const CEComplex>(CEComplex::adjoint(L, torus));
    return c;
}

std::string DeformationContext::coordinate_name(size_t idx) const {
    return CochainSpace(algebra.dim(), 2, algebra.dim()).coordinate_name(idx);
}

Rational DeformationContext::base_value(size_t idx) const {
    auto [t, k] = CochainSpace(algebra.dim(), 2, algebra.dim()).at(idx);
    return algebra.get(t[0], t[1], k);
}

namespace {

std::vector<SparseVec> b2_basis(const DeformationContext& ctx) {
    std::vector<SparseVec> out;
    Echelon e;
    size_t tag = 0;
    for (size_t c : ctx.complex->coordinates(1)) {
        SparseVec v = ctx.complex->d_column(1, c);
        if (!v.empty() && e.insert(v, tag++)) out.push_back(v);
    }
    return out;
}

}  // namespace

AdmissibleSet admissible_set(const DeformationContext& ctx) {
    Echelon e;
    size_t tag = 0;
    for (auto& v : b2_basis(ctx)) e.insert(v, tag++);
    return {e.pivots(), e.rank(), false};
}

AdmissibilityCheck check_admissible(const DeformationContext& ctx, const std::vector<size_t>& indices) {
    auto B = b2_basis(ctx);
    if (indices.size() != B.size())
        return {false, "expected " + std::to_string(B.size()) + " coordinates, got " + std::to_string(indices.size())};
    const auto& coords = ctx.coordinates();
    for (size_t a : indices)
        if (!std::binary_search(coords.begin(), coords.end(), a))
            return {false, "coordinate " + ctx.coordinate_name(a) + " is not a coordinate of the problem"};
    std::vector<size_t> sorted = indices;
    std::sort(sorted.begin(), sorted.end());
    Echelon e;
    size_t tag = 0;
    for (auto& v : B) {
        SparseVec proj;
        for (auto& [i, c] : v)
            if (std::binary_search(sorted.begin(), sorted.end(), i)) proj.emplace_back(i, c);
        e.insert(proj, tag++);
    }
    if (e.rank() != B.size()) return {false, "B^2 does not project onto the chosen coordinates"};
    return {true, ""};
}

std::vector<Poly> SlicePresentation::generator_list() const {
    std::vector<Poly> out;
    for (auto& [k, p] : generators) out.push_back(p);
    return out;
}

QuotientPresentation SlicePresentation::quotient() const {
    return make_quotient(ring, generator_list(), RationalVector(ring->nvars(), 0));
}

std::vector<std::string> SlicePresentation::essential_names() const {
    std::vector<std::string> out;
    for (size_t c : essential) out.push_back(ctx.coordinate_name(c));
    return out;
}

size_t SlicePresentation::variable_of(size_t coordinate) const {
    auto it = std::lower_bound(free.begin(), free.end(), coordinate);
    if (it == free.end() || *it != coordinate) throw std::invalid_argument("coordinate is not free in the slice");
    return static_cast<size_t>(it - free.begin());
}

std::vector<std::pair<size_t, SparseVec>> SlicePresentation::linear_parts() const {
    std::vector<std::pair<size_t, SparseVec>> out;
    for (auto& [k, p] : generators) {
        std::map<size_t, Rational> acc;
        for (auto& t : p.terms()) {
            if (exp_degree(t.exp) != 1) continue;
            for (size_t v = 0; v < t.exp.size(); ++v)
                if (t.exp[v] == 1) acc[v] += t.coef;
        }
        out.emplace_back(k, sparse_from_map(acc));
    }
    return out;
}

SlicePresentation slice_presentation(const DeformationContext& ctx, const AdmissibleSet& A) {
    auto check = check_admissible(ctx, A.indices);
    if (!check.admissible) throw std::invalid_argument("set is not admissible: " + check.reason);
    SlicePresentation S;
    S.ctx = ctx;
    S.A = A;
    std::sort(S.A.indices.begin(), S.A.indices.end());
    for (size_t c : ctx.coordinates())
        if (!std::binary_search(S.A.indices.begin(), S.A.indices.end(), c)) S.free.push_back(c);
    std::vector<std::string> names;
    for (size_t c : S.free) names.push_back(ctx.coordinate_name(c));
    S.ring = make_ring(names);
    std::map<size_t, Poly> values;
    for (size_t a : S.A.indices) {
        Rational v = ctx.base_value(a);
        if (!is_zero(v)) values.emplace(a, Poly::constant(S.ring, v));
    }
    for (size_t i = 0; i < S.free.size(); ++i)
        values.emplace(S.free[i], Poly::constant(S.ring, ctx.base_value(S.free[i])) + Poly::variable(S.ring, i));
    S.generators = jacobi_polynomials(ctx.algebra.dim(), values);

    // Tangent space and essential coordinates.
    auto lin = S.linear_parts();
    std::vector<std::map<size_t, Rational>> cols(S.free.size());
    for (size_t r = 0; r < lin.size(); ++r)
        for (auto& [v, c] : lin[r].second) cols[v][r] = c;
    std::vector<SparseVec> columns;
    for (auto& c : cols) columns.push_back(sparse_from_map(c));
    ColumnResult res = analyze_columns(columns);
    S.tangent_dim = res.kernel.size();
    std::vector<size_t> order;
    for (size_t v = 0; v < S.free.size(); ++v)
        if (is_zero(ctx.base_value(S.free[v]))) order.push_back(v);
    for (size_t v = 0; v < S.free.size(); ++v)
        if (!is_zero(ctx.base_value(S.free[v]))) order.push_back(v);
    Echelon e;
    for (size_t v : order) {
        if (e.rank() == S.tangent_dim) break;
        std::map<size_t, Rational> proj;
        for (size_t k = 0; k < res.kernel.size(); ++k) {
            Rational x = sparse_get(res.kernel[k], v);
            if (!is_zero(x)) proj[k] = x;
        }
        if (e.insert(sparse_from_map(proj), v)) S.essential.push_back(S.free[v]);
    }
    std::sort(S.essential.begin(), S.essential.end());
    return S;
}

SlicePresentation slice_presentation(const DeformationContext& ctx) { return slice_presentation(ctx, admissible_set(ctx)); }

LinearElimination eliminate_slice(const SlicePresentation& S) {
    return local_linear_elimination(S.ring, S.generator_list(), S.essential_names());
}

}  // namespace ldef
