#include "ldef/lie/cochain.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace ldef {

int sort_with_sign(Tuple& t) {
    int sign = 1;
    for (size_t i = 1; i < t.size(); ++i)
        for (size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j]) return 0;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    return sign;
}

size_t binomial(size_t n, size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    size_t r = 1;
    for (size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

CochainSpace::CochainSpace(size_t m, unsigned k, size_t vdim) : m_(m), k_(k), vdim_(vdim) {
    ntuples_ = binomial(m, k);
    binom_.assign(m + 1, std::vector<size_t>(k + 1, 0));
    for (size_t n = 0; n <= m; ++n)
        for (size_t r = 0; r <= k; ++r) binom_[n][r] = binomial(n, r);
}

size_t CochainSpace::tuple_rank(const Tuple& t) const {
    if (t.size() != k_) throw std::invalid_argument("tuple length differs from cochain degree");
    size_t rank = 0;
    size_t prev = 0;
    for (size_t i = 0; i < k_; ++i) {
        size_t start = i == 0 ? 0 : prev + 1;
        for (size_t j = start; j < t[i]; ++j) rank += binom_[m_ - 1 - j][k_ - 1 - i];
        prev = t[i];
    }
    return rank;
}

Tuple CochainSpace::tuple(size_t rank) const {
    Tuple t(k_);
    size_t j = 0;
    for (size_t i = 0; i < k_; ++i) {
        while (true) {
            size_t block = binom_[m_ - 1 - j][k_ - 1 - i];
            if (rank < block) break;
            rank -= block;
            ++j;
        }
        t[i] = j++;
    }
    return t;
}

std::string CochainSpace::coordinate_name(size_t idx) const {
    auto [t, out] = at(idx);
    std::string s = "X";
    for (size_t i = 0; i < t.size(); ++i) s += (i ? "_" : "") + std::to_string(t[i] + 1);
    s += (t.empty() ? "" : "_") + std::to_string(out + 1);
    return s;
}

Module Module::adjoint(const LieAlgebra& L) {
    Module V;
    V.dim = L.dim();
    V.action.assign(L.dim(), std::vector<SparseVec>(L.dim()));
    for (size_t i = 0; i < L.dim(); ++i)
        for (size_t j = 0; j < L.dim(); ++j) V.action[i][j] = L.bracket(i, j);
    return V;
}

Module Module::trivial(size_t algebra_dim, size_t vdim) {
    Module V;
    V.dim = vdim;
    V.action.assign(algebra_dim, std::vector<SparseVec>(vdim));
    return V;
}

bool Module::is_trivial() const {
    for (auto& a : action)
        for (auto& v : a)
            if (!v.empty()) return false;
    return true;
}

Rational Cochain::value(Tuple t, size_t out) const {
    int s = sort_with_sign(t);
    if (s == 0) return 0;
    Rational v = sparse_get(comps, space().index(t, out));
    return s > 0 ? v : Rational(-v);
}

Cochain bracket_cochain(const LieAlgebra& L) {
    Cochain c{L.dim(), 2, L.dim(), {}};
    CochainSpace s(L.dim(), 2, L.dim());
    std::map<size_t, Rational> acc;
    for (auto& [key, v] : L.constants()) acc[s.index({key[0], key[1]}, key[2])] = v;
    c.comps = sparse_from_map(acc);
    return c;
}

LieAlgebra algebra_from_cochain(const Cochain& c) {
    if (c.degree != 2 || c.vdim != c.m) throw std::invalid_argument("a Lie bracket is an adjoint 2-cochain");
    LieAlgebra L(c.m);
    CochainSpace s = c.space();
    for (auto& [idx, v] : c.comps) {
        auto [t, out] = s.at(idx);
        L.set(t[0], t[1], out, v);
    }
    return L;
}

SparseVec differential_column(const LieAlgebra& L, const Module& V, unsigned k, size_t idx) {
    const size_t m = L.dim();
    CochainSpace src(m, k, V.dim), dst(m, k + 1, V.dim);
    auto [I, o] = src.at(idx);
    std::map<size_t, Rational> acc;
    for (size_t a = 0; a < m; ++a) {
        if (std::binary_search(I.begin(), I.end(), a)) continue;
        const SparseVec& img = V.action[a][o];
        if (img.empty()) continue;
        Tuple J = I;
        auto pos = static_cast<size_t>(std::lower_bound(J.begin(), J.end(), a) - J.begin());
        J.insert(J.begin() + static_cast<long>(pos), a);
        size_t r = dst.tuple_rank(J);
        for (auto& [row, c] : img) acc[dst.index_of_rank(r, row)] += (pos % 2 ? -c : c);
    }
    for (size_t p = 0; p < I.size(); ++p) {
        size_t c = I[p];
        Tuple rest = I;
        rest.erase(rest.begin() + static_cast<long>(p));
        for (auto& src_pair : L.sources(c)) {
            size_t a = src_pair.a, b = src_pair.b;
            if (std::binary_search(rest.begin(), rest.end(), a) || std::binary_search(rest.begin(), rest.end(), b))
                continue;
            Tuple J = rest;
            J.push_back(a);
            J.push_back(b);
            std::sort(J.begin(), J.end());
            size_t i = static_cast<size_t>(std::find(J.begin(), J.end(), a) - J.begin());
            size_t l = static_cast<size_t>(std::find(J.begin(), J.end(), b) - J.begin());
            Rational v = src_pair.coef;
            if ((i + l + p) % 2) v = -v;
            acc[dst.index(J, o)] += v;
        }
    }
    return sparse_from_map(acc);
}

SparseVec differential(const LieAlgebra& L, const Module& V, unsigned k, const SparseVec& f) {
    std::map<size_t, Rational> acc;
    for (auto& [idx, c] : f)
        for (auto& [j, v] : differential_column(L, V, k, idx)) acc[j] += c * v;
    return sparse_from_map(acc);
}

Cochain differential(const LieAlgebra& L, const Cochain& f) {
    if (f.m != L.dim() || f.vdim != L.dim()) throw std::invalid_argument("cochain does not match the algebra");
    return {f.m, f.degree + 1, f.vdim, differential(L, Module::adjoint(L), f.degree, f.comps)};
}

Cochain compose(const Cochain& f, const Cochain& g) {
    if (f.m != g.m || f.vdim != f.m || g.vdim != g.m) throw std::invalid_argument("compose needs adjoint cochains of one dimension");
    const unsigned p = f.degree, q = g.degree;
    if (p == 0) return {f.m, q == 0 ? 0u : q - 1, f.vdim, {}};
    const unsigned n = p + q - 1;
    CochainSpace fs = f.space(), gs = g.space(), out(f.m, n, f.vdim);
    std::map<size_t, Rational> acc;
    for (auto& [fi, fv] : f.comps) {
        auto [T, o] = fs.at(fi);
        for (size_t cp = 0; cp < T.size(); ++cp) {
            size_t c = T[cp];
            Tuple R = T;
            R.erase(R.begin() + static_cast<long>(cp));
            // f(x_c, x_R) = (-1)^cp f(x_T).
            Rational base = cp % 2 ? Rational(-fv) : fv;
            for (auto& [gi, gv] : g.comps) {
                auto [S, gc] = gs.at(gi);
                if (gc != c) continue;
                bool disjoint = true;
                for (size_t s : S)
                    if (std::binary_search(R.begin(), R.end(), s)) disjoint = false;
                if (!disjoint) continue;
                Tuple J = S;
                J.insert(J.end(), R.begin(), R.end());
                int sign = sort_with_sign(J);
                acc[out.index(J, o)] += sign * base * gv;
            }
        }
    }
    return {f.m, n, f.vdim, sparse_from_map(acc)};
}

Cochain cochain_add(const Cochain& a, const Cochain& b, const Rational& c) {
    if (a.m != b.m || a.degree != b.degree || a.vdim != b.vdim) throw std::invalid_argument("cochain shapes differ");
    return {a.m, a.degree, a.vdim, sparse_axpy(a.comps, c, b.comps)};
}

Cochain nr_bracket(const Cochain& f, const Cochain& g) {
    if (f.m != g.m) throw std::invalid_argument("cochains of different dimensions");
    const int p = static_cast<int>(f.degree), q = static_cast<int>(g.degree);
    Cochain fg = compose(f, g), gf = compose(g, f);
    int e = std::abs((p - 1) * (q - 1));
    Rational sign = (e % 2 == 0) ? Rational(-1) : Rational(1);
    unsigned n = static_cast<unsigned>(std::max(p + q - 1, 0));
    fg.degree = gf.degree = n;
    return cochain_add(fg, gf, sign);
}

Weight coordinate_weight(const CochainSpace& s, size_t idx, const std::vector<Weight>& algebra_weights,
                         const std::vector<Weight>& module_weights) {
    auto [t, out] = s.at(idx);
    Weight w = module_weights.at(out);
    for (size_t i : t)
        for (size_t r = 0; r < w.size(); ++r) w[r] -= algebra_weights.at(i)[r];
    return w;
}

}  // namespace ldef
