#include "ldef/lie/deformation.hpp"

#include <stdexcept>

namespace ldef {

TruncatedSeries DeformationSeries::constant(size_t i, size_t j, size_t k) const {
    if (i == j) return zero();
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -1;
    }
    CochainSpace s(base.dim(), 2, base.dim());
    size_t idx = s.index({i, j}, k);
    TruncatedSeries out = TruncatedSeries::constant(params, order, base.get(i, j, k));
    auto it = xi.find(idx);
    if (it != xi.end()) out += it->second;
    return sign > 0 ? out : -out;
}

TruncatedSeries DeformationSeries::perturbation(size_t idx) const {
    auto it = xi.find(idx);
    return it == xi.end() ? zero() : it->second;
}

void DeformationSeries::set_perturbation(size_t idx, TruncatedSeries s) {
    if (!is_zero(s.constant_term())) throw std::invalid_argument("perturbation must vanish at the base point");
    if (s.is_zero())
        xi.erase(idx);
    else
        xi[idx] = std::move(s);
}

std::map<size_t, TruncatedSeries> DeformationSeries::jacobi_residual() const {
    const size_t m = base.dim();
    CochainSpace s2(m, 2, m), s3(m, 3, m);
    // Full sparse table of [e_a, e_b] for a < b.
    std::vector<std::vector<std::pair<size_t, TruncatedSeries>>> table(s2.ntuples());
    for (size_t r = 0; r < s2.ntuples(); ++r) {
        Tuple t = s2.tuple(r);
        for (size_t k = 0; k < m; ++k) {
            TruncatedSeries c = constant(t[0], t[1], k);
            if (!c.is_zero()) table[r].emplace_back(k, std::move(c));
        }
    }
    auto br = [&](size_t a, size_t b, std::map<size_t, TruncatedSeries>& acc, const TruncatedSeries& coef) {
        if (a == b) return;
        int sign = a < b ? 1 : -1;
        Tuple t = a < b ? Tuple{a, b} : Tuple{b, a};
        for (auto& [k, c] : table[s2.tuple_rank(t)]) {
            TruncatedSeries v = coef * c;
            if (sign < 0) v = -v;
            auto it = acc.find(k);
            if (it == acc.end())
                acc.emplace(k, std::move(v));
            else
                it->second += v;
        }
    };
    std::map<size_t, TruncatedSeries> out;
    for (size_t r = 0; r < s3.ntuples(); ++r) {
        Tuple t = s3.tuple(r);
        std::map<size_t, TruncatedSeries> acc;
        const size_t cyc[3][3] = {{t[0], t[1], t[2]}, {t[1], t[2], t[0]}, {t[2], t[0], t[1]}};
        for (auto& c : cyc) {
            // [[x, y], z]
            std::map<size_t, TruncatedSeries> inner;
            br(c[0], c[1], inner, TruncatedSeries::constant(params, order, 1));
            for (auto& [s, v] : inner) br(s, c[2], acc, v);
        }
        for (auto& [l, v] : acc)
            if (!v.is_zero()) out.emplace(s3.index_of_rank(r, l), v);
    }
    return out;
}

bool DeformationSeries::operator==(const DeformationSeries& o) const {
    if (!(base == o.base) || order != o.order || params != o.params) return false;
    return xi == o.xi;
}

DeformationSeries trivial_deformation(const LieAlgebra& base, std::vector<std::string> params, unsigned order) {
    DeformationSeries d;
    d.base = base;
    d.params = std::move(params);
    d.order = order;
    return d;
}

GaugeTransform GaugeTransform::identity(size_t dim, std::vector<std::string> params, unsigned order) {
    GaugeTransform g;
    g.dim = dim;
    g.params = params;
    g.order = order;
    g.entries.assign(dim, std::vector<TruncatedSeries>(dim, TruncatedSeries(params, order)));
    for (size_t i = 0; i < dim; ++i) g.entries[i][i] = TruncatedSeries::constant(params, order, 1);
    return g;
}

GaugeTransform GaugeTransform::from_perturbation(const std::vector<std::vector<TruncatedSeries>>& L) {
    if (L.empty() || L.front().empty()) throw std::invalid_argument("empty gauge perturbation");
    const TruncatedSeries& s = L.front().front();
    GaugeTransform g = identity(L.size(), s.params(), s.order());
    for (size_t i = 0; i < L.size(); ++i)
        for (size_t j = 0; j < L.size(); ++j) {
            if (!is_zero(L[i][j].constant_term())) throw std::invalid_argument("gauge perturbation must vanish at 0");
            g.entries[i][j] += L[i][j];
        }
    return g;
}

GaugeTransform GaugeTransform::operator*(const GaugeTransform& o) const {
    GaugeTransform out = identity(dim, params, order);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            TruncatedSeries acc(params, order);
            for (size_t k = 0; k < dim; ++k)
                if (!entries[i][k].is_zero() && !o.entries[k][j].is_zero()) acc += entries[i][k] * o.entries[k][j];
            out.entries[i][j] = std::move(acc);
        }
    return out;
}

GaugeTransform GaugeTransform::inverse() const {
    // s = id + N with N in the maximal ideal: s^-1 = sum (-N)^p, p <= order.
    GaugeTransform negN = identity(dim, params, order);
    for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
            TruncatedSeries n = entries[i][j];
            if (i == j) n -= TruncatedSeries::constant(params, order, 1);
            if (!is_zero(n.constant_term())) throw std::invalid_argument("gauge transform must reduce to the identity");
            negN.entries[i][j] = -n;
        }
    GaugeTransform acc = identity(dim, params, order);
    GaugeTransform power = identity(dim, params, order);
    for (unsigned p = 1; p <= order; ++p) {
        power = power * negN;
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) acc.entries[i][j] += power.entries[i][j];
    }
    return acc;
}

bool GaugeTransform::is_identity() const { return *this == identity(dim, params, order); }

bool GaugeTransform::operator==(const GaugeTransform& o) const {
    return dim == o.dim && order == o.order && params == o.params && entries == o.entries;
}

DeformationSeries gauge_act(const GaugeTransform& s, const DeformationSeries& phi) {
    const size_t m = phi.base.dim();
    if (s.dim != m) throw std::invalid_argument("gauge dimension differs from the algebra");
    if (s.params != phi.params || s.order != phi.order)
        throw std::invalid_argument("gauge and deformation use different parameter rings");
    GaugeTransform inv = s.inverse();
    CochainSpace s2(m, 2, m);
    std::vector<std::vector<std::pair<size_t, TruncatedSeries>>> table(s2.ntuples());
    for (size_t r = 0; r < s2.ntuples(); ++r) {
        Tuple t = s2.tuple(r);
        for (size_t k = 0; k < m; ++k) {
            TruncatedSeries c = phi.constant(t[0], t[1], k);
            if (!c.is_zero()) table[r].emplace_back(k, std::move(c));
        }
    }
    DeformationSeries out = trivial_deformation(phi.base, phi.params, phi.order);
    for (size_t r = 0; r < s2.ntuples(); ++r) {
        Tuple ij = s2.tuple(r);
        // psi^c = phi(s^-1 e_i, s^-1 e_j)^c
        std::vector<TruncatedSeries> psi(m, phi.zero());
        for (size_t q = 0; q < s2.ntuples(); ++q) {
            if (table[q].empty()) continue;
            Tuple ab = s2.tuple(q);
            TruncatedSeries w = inv.entries[ab[0]][ij[0]] * inv.entries[ab[1]][ij[1]] -
                                inv.entries[ab[1]][ij[0]] * inv.entries[ab[0]][ij[1]];
            if (w.is_zero()) continue;
            for (auto& [c, v] : table[q]) psi[c] += w * v;
        }
        for (size_t k = 0; k < m; ++k) {
            TruncatedSeries acc = phi.zero();
            for (size_t c = 0; c < m; ++c)
                if (!psi[c].is_zero() && !s.entries[k][c].is_zero()) acc += s.entries[k][c] * psi[c];
            acc -= TruncatedSeries::constant(phi.params, phi.order, phi.base.get(ij[0], ij[1], k));
            out.set_perturbation(s2.index_of_rank(r, k), std::move(acc));
        }
    }
    return out;
}

}  // namespace ldef
