#include "ldef/reduction/semidirect.hpp"

#include <stdexcept>

namespace ldef {

namespace {

std::vector<Matrix> ad_matrices(const LieAlgebra& L) {
    std::vector<Matrix> out;
    for (size_t i = 0; i < L.dim(); ++i) out.push_back(ad_matrix(L, i));
    return out;
}

// Index of the same tuple and output in the larger cochain space.
SparseVec embed_vector(const CochainSpace& from, const CochainSpace& to, const SparseVec& v) {
    std::map<size_t, Rational> acc;
    for (auto& [idx, c] : v) {
        auto [t, out] = from.at(idx);
        acc[to.index(t, out)] = c;
    }
    return sparse_from_map(acc);
}

Cochain embed_unchecked(const SemidirectData& S, const Cochain& f) {
    const size_t m = S.assembled.dim();
    Cochain out{m, f.degree, m, {}};
    out.comps = embed_vector(f.space(), out.space(), f.comps);
    return out;
}

// Columns d(e_idx) for all of C^{k-1}(g, g), inserted into an echelon.
Echelon coboundaries(const CEComplex& C, unsigned k) {
    Echelon e;
    if (k == 0) return e;
    for (size_t idx = 0; idx < C.dimension(k - 1); ++idx) e.insert(C.d_column(k - 1, idx), idx);
    return e;
}

}  // namespace

std::vector<Matrix> SemidirectData::quotient_action() const { return ad_matrices(reductive); }

SemidirectData semidirect_assemble(const LieAlgebra& n, const DerivationSet& D, std::optional<LieAlgebra> R) {
    const size_t dn = n.dim();
    if (!D.empty() && D.dim != dn) throw std::invalid_argument("derivations act on a space of another dimension");
    const size_t r = D.size();
    LieAlgebra Rl = R ? *R : LieAlgebra(r);
    if (Rl.dim() != r) throw std::invalid_argument("one reductive basis element per derivation expected");
    for (size_t i = 0; i < r; ++i)
        if (!is_derivation(n, D.matrices[i]))
            throw std::invalid_argument("action " + std::to_string(i + 1) + " is not a derivation");
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j) {
            Matrix c = commutator(D.matrices[i], D.matrices[j]);
            Matrix expect = zero_matrix(dn);
            for (size_t k = 0; k < r; ++k) {
                Rational x = Rl.get(i, j, k);
                if (is_zero(x)) continue;
                for (size_t a = 0; a < dn; ++a)
                    for (size_t b = 0; b < dn; ++b) expect[a][b] += x * D.matrices[k][a][b];
            }
            if (c != expect)
                throw std::invalid_argument("commutator of actions " + std::to_string(i + 1) + " and " +
                                            std::to_string(j + 1) + " differs from the reductive bracket");
        }
    LieAlgebra g(dn + r);
    for (auto& [key, v] : n.constants()) g.set(key[0], key[1], key[2], v);
    for (size_t i = 0; i < r; ++i)
        for (size_t b = 0; b < dn; ++b)
            for (size_t a = 0; a < dn; ++a) {
                // [r_i, e_b] = delta_i e_b, stored as [e_b, r_i] = -delta_i e_b.
                const Rational& x = D.matrices[i][a][b];
                if (!is_zero(x)) g.set(b, dn + i, a, -x);
            }
    for (auto& [key, v] : Rl.constants()) g.set(dn + key[0], dn + key[1], dn + key[2], v);
    if (!check_jacobi(g).empty()) throw std::invalid_argument("assembled bracket violates the Jacobi identity");
    return SemidirectData{n, D, Rl, g};
}

SemidirectData torus_semidirect(const GradedAlgebra& g) {
    return semidirect_assemble(g.algebra, g.weights.empty() ? DerivationSet{g.algebra.dim(), {}} : g.torus());
}

Cochain derivation_act(const Matrix& delta, const Cochain& f) {
    if (f.vdim != f.m || delta.size() != f.m) throw std::invalid_argument("adjoint cochain of matching dimension expected");
    CochainSpace s = f.space();
    std::map<size_t, Rational> acc;
    for (size_t rk = 0; rk < s.ntuples(); ++rk) {
        Tuple t = s.tuple(rk);
        for (size_t l = 0; l < f.m; ++l) {
            Rational v = 0;
            for (size_t c = 0; c < f.m; ++c)
                if (!is_zero(delta[l][c])) v += delta[l][c] * f.value(t, c);
            for (size_t p = 0; p < t.size(); ++p)
                for (size_t a = 0; a < f.m; ++a) {
                    if (is_zero(delta[a][t[p]])) continue;
                    Tuple u = t;
                    u[p] = a;
                    v -= delta[a][t[p]] * f.value(u, l);
                }
            if (!is_zero(v)) acc[s.index_of_rank(rk, l)] = v;
        }
    }
    Cochain out{f.m, f.degree, f.vdim, sparse_from_map(acc)};
    return out;
}

bool is_invariant(const DerivationSet& D, const Cochain& f) {
    for (auto& d : D.matrices)
        if (!derivation_act(d, f).is_zero()) return false;
    return true;
}

Cochain cochain_embed(const SemidirectData& S, const Cochain& f) {
    if (f.m != S.n() || f.vdim != S.n()) throw std::invalid_argument("cochain must live on the nilradical");
    if (!is_invariant(S.action, f)) throw std::invalid_argument("cochain is not invariant under the reductive part");
    return embed_unchecked(S, f);
}

Cochain transform_cochain(const Matrix& s, const Cochain& f) {
    const size_t m = f.m;
    if (s.size() != m || f.vdim != m) throw std::invalid_argument("gauge and cochain dimensions differ");
    auto inv = dense_inverse(s);
    if (!inv) throw std::invalid_argument("gauge is not invertible");
    CochainSpace sp = f.space();
    // Columns of s^-1 as sparse lists.
    std::vector<std::vector<std::pair<size_t, Rational>>> col(m);
    for (size_t j = 0; j < m; ++j)
        for (size_t a = 0; a < m; ++a)
            if (!is_zero((*inv)[a][j])) col[j].emplace_back(a, (*inv)[a][j]);
    std::map<size_t, Rational> acc;
    for (size_t rk = 0; rk < sp.ntuples(); ++rk) {
        Tuple t = sp.tuple(rk);
        // Multilinear expansion of f(s^-1 e_t1, ..., s^-1 e_tk).
        std::vector<Rational> val(m, 0);
        Tuple u(t.size());
        auto expand = [&](auto&& self, size_t p, const Rational& coef) -> void {
            if (p == t.size()) {
                for (size_t c = 0; c < m; ++c) {
                    Rational x = f.value(u, c);
                    if (!is_zero(x)) val[c] += coef * x;
                }
                return;
            }
            for (auto& [a, x] : col[t[p]]) {
                u[p] = a;
                self(self, p + 1, coef * x);
            }
        };
        expand(expand, 0, Rational(1));
        for (size_t l = 0; l < m; ++l) {
            Rational v = 0;
            for (size_t c = 0; c < m; ++c)
                if (!is_zero(s[l][c]) && !is_zero(val[c])) v += s[l][c] * val[c];
            if (!is_zero(v)) acc[sp.index_of_rank(rk, l)] = v;
        }
    }
    return Cochain{m, f.degree, m, sparse_from_map(acc)};
}

Matrix extend_block(const Matrix& s, size_t r) {
    const size_t n = s.size();
    Matrix out = identity_matrix(n + r);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[i][j] = s[i][j];
    return out;
}

InducedMap induced_map(const SemidirectData& S, unsigned k, bool full_target) {
    const size_t m = S.assembled.dim();
    CEComplex Cn = CEComplex::adjoint(S.nilradical, S.action.empty() ? std::nullopt : std::optional(S.action));
    CohomologyReport hn = Cn.cohomology(k);
    CochainSpace from(S.n(), k, S.n()), to(m, k, m);
    std::vector<SparseVec> images;
    for (auto& h : hn.H_basis) images.push_back(embed_vector(from, to, h));

    InducedMap out;
    out.degree = k;
    out.source_dim = hn.dim_H;
    CEComplex Cg = CEComplex::adjoint(S.assembled);
    if (full_target) {
        CohomologyReport hg = Cg.cohomology(k);
        out.target_dim = hg.dim_H;
        Echelon e;
        size_t tag = 0;
        for (auto& b : hg.B_basis) e.insert(b, tag++);
        const size_t first_h = tag;
        for (auto& h : hg.H_basis) e.insert(h, tag++);
        out.matrix.assign(hg.dim_H, std::vector<Rational>(hn.dim_H, 0));
        for (size_t c = 0; c < images.size(); ++c) {
            SparseVec combo;
            SparseVec rest = e.reduce(images[c], &combo);
            if (!rest.empty()) throw std::logic_error("embedded cocycle is not a cocycle of g");
            for (auto& [t, x] : combo)
                if (t >= first_h) out.matrix[t - first_h][c] = x;
        }
        out.rank = dense_rank(out.matrix);
        out.surjective = out.rank == hg.dim_H;
    } else {
        Echelon e = coboundaries(Cg, k);
        const size_t base = e.rank();
        for (size_t c = 0; c < images.size(); ++c) e.insert(images[c], base + c);
        out.rank = e.rank() - base;
    }
    out.injective = out.rank == hn.dim_H;
    return out;
}

std::string to_string(Prop32Case c) {
    switch (c) {
        case Prop32Case::TorusComplete: return "torus-complete";
        case Prop32Case::NoTorus: return "no-torus";
        case Prop32Case::Neither: return "neither";
    }
    return "neither";
}

bool is_complete(const LieAlgebra& g) {
    return span_dimension(ad_matrices(g)) == g.dim() && derivations(g).size() == g.dim();
}

HypothesisReport check_reduction_hypotheses(const SemidirectData& S, const ReductionOptions& opt) {
    HypothesisReport rep;
    rep.i1 = induced_map(S, 1);
    rep.i2 = induced_map(S, 2);
    rep.i3 = induced_map(S, 3, opt.full_h3);
    rep.h1_epi = rep.i1.surjective.value_or(false);
    rep.h2_iso = rep.i2.injective && rep.i2.surjective.value_or(false);
    rep.h3_mono = rep.i3.injective;
    if (S.r() > 0) {
        std::optional<DerivationSet> inv;
        if (!S.action.empty()) inv = S.action;
        CEComplex Q(S.nilradical, Module::trivial(S.n(), S.r()), inv, S.quotient_action());
        rep.h1_quotient = Q.cohomology(1).dim_H;
        rep.h2_quotient = Q.cohomology(2).dim_H;
        rep.torus_part = span_dimension(S.quotient_action()) < S.r();
    }
    rep.complete = is_complete(S.assembled);
    if (rep.h1_quotient == 0 && rep.h2_quotient == 0) {
        if (rep.torus_part && rep.complete)
            rep.prop32 = Prop32Case::TorusComplete;
        else if (!rep.torus_part)
            rep.prop32 = Prop32Case::NoTorus;
    }
    return rep;
}

}  // namespace ldef
