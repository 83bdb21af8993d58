#include "ldef/lie/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldef {

CEComplex::CEComplex(const LieAlgebra& L, Module V, std::optional<DerivationSet> invariance,
                     std::vector<Matrix> module_action)
    : L_(L), V_(std::move(V)), invariance_(std::move(invariance)), module_action_(std::move(module_action)) {
    if (invariance_ && invariance_->empty()) invariance_.reset();
    if (!invariance_) return;
    if (invariance_->dim != L_.dim()) throw std::invalid_argument("derivation set dimension differs from the algebra");
    if (module_action_.empty()) {
        // The adjoint module carries the derivations themselves; other modules default to the zero action.
        for (auto& D : invariance_->matrices)
            module_action_.push_back(V_.dim == L_.dim() ? D : zero_matrix(V_.dim));
    }
    if (module_action_.size() != invariance_->size()) throw std::invalid_argument("one module action per derivation");
    diagonal_ = invariance_->is_diagonal();
    for (auto& M : module_action_)
        if (!is_diagonal(M)) diagonal_ = false;
    if (diagonal_) {
        weights_ = invariance_->weights();
        DerivationSet mod{V_.dim, module_action_};
        module_weights_ = mod.weights();
    }
}

CEComplex CEComplex::adjoint(const LieAlgebra& L, std::optional<DerivationSet> invariance) {
    return CEComplex(L, Module::adjoint(L), std::move(invariance));
}

std::string CEComplex::invariance_tag() const {
    if (!invariance_) return "none";
    return diagonal_ ? "torus(rank " + std::to_string(invariance_->size()) + ")"
                     : "derivations(" + std::to_string(invariance_->size()) + ")";
}

const std::vector<size_t>& CEComplex::coordinates(unsigned k) const {
    if (!coordinate_restricted()) throw std::logic_error("coordinates are only defined for torus restrictions");
    auto it = coords_.find(k);
    if (it != coords_.end()) return it->second;
    CochainSpace s(L_.dim(), k, V_.dim);
    std::vector<size_t> out;
    for (size_t idx = 0; idx < s.size(); ++idx) {
        if (diagonal_) {
            Weight w = coordinate_weight(s, idx, weights_, module_weights_);
            bool zero = std::all_of(w.begin(), w.end(), [](const Rational& x) { return is_zero(x); });
            if (!zero) continue;
        }
        out.push_back(idx);
    }
    return coords_.emplace(k, std::move(out)).first->second;
}

const std::vector<SparseVec>& CEComplex::subspace(unsigned k) const {
    auto it = subspaces_.find(k);
    if (it != subspaces_.end()) return it->second;
    std::vector<SparseVec> out;
    if (coordinate_restricted()) {
        for (size_t idx : coordinates(k)) out.push_back(sparse_unit(idx));
    } else {
        CochainSpace s(L_.dim(), k, V_.dim);
        const size_t n = s.size();
        std::vector<SparseVec> columns;
        for (size_t idx = 0; idx < n; ++idx) {
            auto [I, o] = s.at(idx);
            std::map<size_t, Rational> acc;
            for (size_t r = 0; r < invariance_->size(); ++r) {
                const Matrix& D = invariance_->matrices[r];
                const Matrix& DV = module_action_[r];
                size_t off = r * n;
                for (size_t row = 0; row < V_.dim; ++row)
                    if (!is_zero(DV[row][o])) acc[off + s.index(I, row)] += DV[row][o];
                for (size_t p = 0; p < I.size(); ++p)
                    for (size_t j = 0; j < L_.dim(); ++j) {
                        const Rational& c = D[I[p]][j];
                        if (is_zero(c)) continue;
                        Tuple T = I;
                        T[p] = j;
                        int sign = sort_with_sign(T);
                        if (sign == 0) continue;
                        acc[off + s.index(T, o)] -= sign * c;
                    }
            }
            columns.push_back(sparse_from_map(acc));
        }
        ColumnResult res = analyze_columns(columns);
        out = std::move(res.kernel);
    }
    return subspaces_.emplace(k, std::move(out)).first->second;
}

const SparseVec& CEComplex::d_column(unsigned k, size_t idx) const {
    auto key = std::make_pair(k, idx);
    auto it = columns_.find(key);
    if (it != columns_.end()) return it->second;
    return columns_.emplace(key, differential_column(L_, V_, k, idx)).first->second;
}

SparseVec CEComplex::d(unsigned k, const SparseVec& f) const {
    std::map<size_t, Rational> acc;
    for (auto& [idx, c] : f)
        for (auto& [j, v] : d_column(k, idx)) acc[j] += c * v;
    return sparse_from_map(acc);
}

size_t CEComplex::rank_d(unsigned k) const {
    Echelon e;
    size_t tag = 0;
    for (auto& u : subspace(k)) e.insert(d(k, u), tag++);
    return e.rank();
}

CohomologyReport CEComplex::cohomology(unsigned k) const {
    CohomologyReport rep;
    rep.degree = k;
    rep.invariance = invariance_tag();
    const auto& U = subspace(k);
    rep.dim_C = U.size();
    std::vector<SparseVec> cols;
    cols.reserve(U.size());
    for (auto& u : U) cols.push_back(d(k, u));
    ColumnResult zr = analyze_columns(cols);
    for (auto& kv : zr.kernel) {
        std::map<size_t, Rational> z;
        for (auto& [j, c] : kv)
            for (auto& [idx, x] : U[j]) z[idx] += c * x;
        rep.Z_basis.push_back(sparse_from_map(z));
    }
    Echelon b;
    if (k > 0) {
        const auto& P = subspace(k - 1);
        size_t tag = 0;
        for (auto& u : P) {
            SparseVec img = d(k - 1, u);
            if (img.empty()) continue;
            if (b.insert(img, tag++)) {
                rep.B_basis.push_back(std::move(img));
                rep.B_preimages.push_back(u);
            }
        }
    }
    size_t tag = rep.B_basis.size();
    for (auto& z : rep.Z_basis)
        if (b.insert(z, tag++)) rep.H_basis.push_back(z);
    rep.dim_Z = rep.Z_basis.size();
    rep.dim_B = rep.B_basis.size();
    rep.dim_H = rep.H_basis.size();
    return rep;
}

CohomologyReport cohomology(const LieAlgebra& L, unsigned k, const DerivationSet* invariance) {
    std::optional<DerivationSet> inv;
    if (invariance) inv = *invariance;
    return CEComplex::adjoint(L, inv).cohomology(k);
}

HodgeSplit hodge_split(const CEComplex& C, unsigned k) {
    HodgeSplit h;
    h.degree = k;
    h.coordinates = C.coordinates(k);
    Echelon e;
    std::vector<size_t> F;
    std::map<size_t, SparseVec> cocycle;
    for (size_t c : h.coordinates) {
        SparseVec rel;
        if (e.insert(C.d_column(k, c), c, &rel)) {
            h.W_idx.push_back(c);
        } else {
            F.push_back(c);
            cocycle[c] = sparse_axpy(sparse_unit(c), -1, rel);
        }
    }
    auto is_w = [&](size_t idx) { return std::binary_search(h.W_idx.begin(), h.W_idx.end(), idx); };
    Echelon bproj;
    if (k > 0) {
        size_t tag = 0;
        for (size_t c : C.coordinates(k - 1)) {
            SparseVec img = C.d_column(k - 1, c);
            SparseVec proj;
            for (auto& [i, x] : img)
                if (!is_w(i)) proj.emplace_back(i, x);
            if (!proj.empty()) bproj.insert(proj, tag++);
        }
    }
    h.B_idx = bproj.pivots();
    for (size_t f : F)
        if (!std::binary_search(h.B_idx.begin(), h.B_idx.end(), f)) {
            h.H_idx.push_back(f);
            h.H_basis.push_back(cocycle[f]);
        }
    return h;
}

}  // namespace ldef
