#include "ldef/graded/graded_scheme.hpp"

#include <algorithm>
#include <stdexcept>

namespace ldef {

namespace {

Weight add(const Weight& a, const Weight& b) {
    Weight s(a.size());
    for (size_t r = 0; r < a.size(); ++r) s[r] = a[r] + b[r];
    return s;
}

}  // namespace

std::string GradedIndexSet::name(const GradedPair& p) const {
    std::string s = "X" + std::to_string(p.i + 1) + "_" + std::to_string(p.j + 1);
    if (!simple) s += "_" + std::to_string(p.k + 1);
    return s;
}

std::optional<size_t> GradedIndexSet::find(size_t i, size_t j, size_t k) const {
    GradedPair key{i, j, k};
    auto it = std::lower_bound(pairs.begin(), pairs.end(), key);
    if (it == pairs.end() || *it != key) return std::nullopt;
    return static_cast<size_t>(it - pairs.begin());
}

GradedIndexSet graded_index_set(const std::vector<Weight>& weights) {
    GradedIndexSet s;
    s.n = weights.size();
    std::vector<Weight> sorted = weights;
    std::sort(sorted.begin(), sorted.end());
    s.simple = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    const size_t n = s.n;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j) {
            Weight w = add(weights[i], weights[j]);
            for (size_t k = 0; k < n; ++k)
                if (weights[k] == w) s.pairs.push_back({i, j, k});
        }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                Weight w = add(add(weights[i], weights[j]), weights[k]);
                for (size_t h = 0; h < n; ++h)
                    if (weights[h] == w) s.triples.push_back({i, j, k, h});
            }
    return s;
}

GradedJacobiSystem graded_jacobi_system(const WeightPath& path, size_t n) {
    if (n > path.length()) throw std::invalid_argument("dimension exceeds the path length");
    auto ws = path.prefix(n);
    GradedJacobiSystem sys;
    sys.index = graded_index_set(ws);
    std::vector<std::string> names;
    for (auto& p : sys.index.pairs) names.push_back(sys.index.name(p));
    sys.ring = make_ring(names);
    auto var = [&](size_t a, size_t b, size_t k) -> Poly {
        if (a == b) return Poly(sys.ring);
        auto idx = sys.index.find(std::min(a, b), std::max(a, b), k);
        if (!idx) return Poly(sys.ring);
        Poly x = Poly::variable(sys.ring, *idx);
        return a < b ? x : -x;
    };
    for (auto& t : sys.index.triples) {
        Poly J(sys.ring);
        const size_t cyc[3][3] = {{t.i, t.j, t.k}, {t.j, t.k, t.i}, {t.k, t.i, t.j}};
        Weight target = ws[t.h];
        for (auto& c : cyc) {
            Weight w = add(ws[c[0]], ws[c[1]]);
            for (size_t l = 0; l < n; ++l)
                if (ws[l] == w) J += var(c[0], c[1], l) * var(l, c[2], t.h);
        }
        sys.polynomials.push_back(std::move(J));
    }
    return sys;
}

WeightHomology h2_weight_space(const LieAlgebra& L, const std::vector<Weight>& weights, const Weight& beta) {
    if (weights.size() != L.dim()) throw std::invalid_argument("one weight per basis vector expected");
    const size_t n = L.dim();
    WeightHomology h;
    std::map<std::pair<size_t, size_t>, size_t> pos;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            if (add(weights[a], weights[b]) == beta) {
                pos[{a, b}] = h.wedges.size();
                h.wedges.emplace_back(a, b);
            }
    h.wedge_dim = h.wedges.size();
    std::vector<SparseVec> cols;
    for (auto [a, b] : h.wedges) cols.push_back(L.bracket(a, b));
    ColumnResult ker = analyze_columns(cols);
    h.kernel_dim = ker.kernel.size();

    // Omega_beta: cyclic sums [x, y] ^ z over weight-beta triples.
    Echelon omega;
    size_t tag = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                if (add(add(weights[a], weights[b]), weights[c]) != beta) continue;
                std::map<size_t, Rational> acc;
                const size_t cyc[3][3] = {{a, b, c}, {b, c, a}, {c, a, b}};
                for (auto& t : cyc)
                    for (auto& [l, x] : L.bracket(t[0], t[1])) {
                        if (l == t[2]) continue;
                        int sign = l < t[2] ? 1 : -1;
                        auto it = pos.find({std::min(l, t[2]), std::max(l, t[2])});
                        if (it == pos.end()) throw std::logic_error("bracket leaves its weight space");
                        acc[it->second] += sign * x;
                    }
                SparseVec v = sparse_from_map(acc);
                if (!v.empty()) omega.insert(v, tag++);
            }
    h.boundary_rank = omega.rank();
    for (auto& k : ker.kernel)
        if (omega.insert(k, tag++)) h.basis.push_back(k);
    h.dim = h.basis.size();
    return h;
}

StratumReport stratum_check(const LieAlgebra& L, const std::vector<Weight>& weights) {
    StratumReport r;
    DerivationSet T = DerivationSet::torus(weights);
    r.torus_dim = span_dimension(T.matrices);
    r.der_T_dim = derivations(L, &T).size();
    r.in_open_stratum = r.der_T_dim == r.torus_dim;
    return r;
}

namespace {

std::optional<Integer> exact_root(const Integer& x, unsigned long q) {
    if (sgn(x) < 0 && q % 2 == 0) return std::nullopt;
    Integer a = abs(x), r;
    if (mpz_root(r.get_mpz_t(), a.get_mpz_t(), q) == 0) return std::nullopt;
    return sgn(x) < 0 ? Integer(-r) : r;
}

// c^e for rational e, when the result is rational.
std::optional<Rational> rational_power(const Rational& c, const Rational& e) {
    Integer p = e.get_num(), q = e.get_den();
    auto num = exact_root(c.get_num(), q.get_ui());
    auto den = exact_root(c.get_den(), q.get_ui());
    if (!num || !den) return std::nullopt;
    Rational base(*num, *den);
    Rational out = 1;
    unsigned long k = Integer(abs(p)).get_ui();
    for (unsigned long i = 0; i < k; ++i) out *= base;
    return sgn(p) < 0 ? Rational(1 / out) : out;
}

}  // namespace

std::optional<std::vector<Rational>> diagonal_normalization(const LieAlgebra& L, const std::vector<GradedPair>& A,
                                                            const std::vector<Rational>& target) {
    if (A.size() != target.size()) throw std::invalid_argument("one target value per coordinate expected");
    const size_t n = L.dim();
    // s^{e_k - e_i - e_j} = target / L_{ij}^k, solved on an independent subset of equations.
    std::vector<Rational> ratio;
    std::vector<size_t> rows;
    Echelon e;
    for (size_t a = 0; a < A.size(); ++a) {
        Rational x = L.get(A[a].i, A[a].j, A[a].k);
        if (is_zero(x) || is_zero(target[a])) return std::nullopt;
        ratio.push_back(target[a] / x);
        std::map<size_t, Rational> v;
        v[A[a].k] += 1;
        v[A[a].i] -= 1;
        v[A[a].j] -= 1;
        if (e.insert(sparse_from_map(v), a)) rows.push_back(a);
    }
    auto exponent = [&](size_t a, size_t col) {
        Rational x = 0;
        if (A[a].k == col) x += 1;
        if (A[a].i == col) x -= 1;
        if (A[a].j == col) x -= 1;
        return x;
    };
    auto check = [&](const std::vector<Rational>& s) {
        for (size_t a = 0; a < A.size(); ++a)
            if (s[A[a].k] != ratio[a] * s[A[a].i] * s[A[a].j]) return false;
        return true;
    };
    const size_t r = rows.size();
    if (r == 0) {
        std::vector<Rational> s(n, 1);
        return check(s) ? std::optional(s) : std::nullopt;
    }
    std::vector<size_t> pick(r);
    for (size_t i = 0; i < r; ++i) pick[i] = i;
    for (size_t tried = 0; tried < 100000; ++tried) {
        std::vector<std::vector<Rational>> M(r, std::vector<Rational>(r));
        for (size_t x = 0; x < r; ++x)
            for (size_t y = 0; y < r; ++y) M[x][y] = exponent(rows[x], pick[y]);
        if (auto inv = dense_inverse(M)) {
            std::vector<Rational> s(n, 1);
            bool ok = true;
            for (size_t y = 0; y < r && ok; ++y) {
                Rational v = 1;
                for (size_t x = 0; x < r && ok; ++x) {
                    if (is_zero((*inv)[y][x])) continue;
                    auto f = rational_power(ratio[rows[x]], (*inv)[y][x]);
                    if (!f) ok = false;
                    else v *= *f;
                }
                s[pick[y]] = v;
            }
            if (ok && check(s)) return s;
        }
        size_t i = r;
        while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

LieAlgebra diagonal_act(const LieAlgebra& L, const std::vector<Rational>& s) {
    LieAlgebra out(L.dim(), L.labels());
    for (auto& [key, c] : L.constants()) out.set(key[0], key[1], key[2], s[key[2]] / (s[key[0]] * s[key[1]]) * c);
    return out;
}

}  // namespace ldef
