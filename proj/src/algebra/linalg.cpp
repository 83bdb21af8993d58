#include "ldef/algebra/linalg.hpp"

#include <algorithm>

namespace ldef {

SparseVec sparse_unit(size_t index, const Rational& c) {
    if (is_zero(c)) return {};
    return {{index, c}};
}

SparseVec sparse_from_map(const std::map<size_t, Rational>& m) {
    SparseVec out;
    out.reserve(m.size());
    for (auto& [i, c] : m)
        if (!is_zero(c)) out.emplace_back(i, c);
    return out;
}

SparseVec sparse_axpy(const SparseVec& a, const Rational& c, const SparseVec& b) {
    if (is_zero(c) || b.empty()) return a;
    SparseVec out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, c * b[j].second);
            ++j;
        } else {
            Rational s = a[i].second + c * b[j].second;
            if (!is_zero(s)) out.emplace_back(a[i].first, std::move(s));
            ++i;
            ++j;
        }
    }
    return out;
}

SparseVec sparse_scale(const SparseVec& a, const Rational& c) {
    if (is_zero(c)) return {};
    SparseVec out = a;
    for (auto& e : out) e.second *= c;
    return out;
}

Rational sparse_get(const SparseVec& a, size_t index) {
    auto it = std::lower_bound(a.begin(), a.end(), index, [](const auto& e, size_t i) { return e.first < i; });
    return it != a.end() && it->first == index ? it->second : Rational(0);
}

Rational sparse_dot(const SparseVec& a, const SparseVec& b) {
    Rational s = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) ++i;
        else if (b[j].first < a[i].first) ++j;
        else s += a[i++].second * b[j++].second;
    }
    return s;
}

SparseVec Echelon::reduce(const SparseVec& v, SparseVec* combo) const {
    std::map<size_t, Rational> work;
    for (auto& [i, c] : v) work.emplace(i, c);
    std::map<size_t, Rational> comb;
    auto eliminate = [&](size_t idx) {
        auto w = work.find(idx);
        if (w == work.end()) return;
        auto r = rows_.find(idx);
        if (r == rows_.end()) return;
        Rational c = w->second;
        for (auto& [j, x] : r->second.v) {
            auto it = work.find(j);
            if (it == work.end()) work.emplace(j, -c * x);
            else {
                it->second -= c * x;
                if (is_zero(it->second)) work.erase(it);
            }
        }
        if (combo)
            for (auto& [t, x] : r->second.combo) comb[t] += c * x;
    };
    if (rule_ == PivotRule::Lowest) {
        size_t cursor = 0;
        while (true) {
            auto it = work.lower_bound(cursor);
            while (it != work.end() && !rows_.count(it->first)) ++it;
            if (it == work.end()) break;
            cursor = it->first;
            eliminate(cursor);
        }
    } else {
        while (!work.empty()) {
            bool found = false;
            for (auto it = work.rbegin(); it != work.rend(); ++it) {
                if (rows_.count(it->first)) {
                    eliminate(it->first);
                    found = true;
                    break;
                }
            }
            if (!found) break;
        }
    }
    if (combo) *combo = sparse_from_map(comb);
    return sparse_from_map(work);
}

bool Echelon::insert(const SparseVec& v, size_t tag, SparseVec* relation) {
    SparseVec combo;
    SparseVec r = reduce(v, &combo);
    if (r.empty()) {
        if (relation) *relation = std::move(combo);
        return false;
    }
    size_t pivot = rule_ == PivotRule::Lowest ? r.front().first : r.back().first;
    Rational inv = Rational(1) / sparse_get(r, pivot);
    // r = v - combo.inserted, so the stored row combines e_tag - combo.
    SparseVec rc = sparse_axpy(sparse_unit(tag), -1, combo);
    rows_.emplace(pivot, Row{sparse_scale(r, inv), sparse_scale(rc, inv)});
    return true;
}

std::vector<size_t> Echelon::pivots() const {
    std::vector<size_t> out;
    for (auto& [p, r] : rows_) out.push_back(p);
    return out;
}

std::vector<SparseVec> Echelon::reduced_rows() const {
    // Lowest rule: row p only has entries >= p, so a descending sweep suffices; Highest mirrors it.
    std::map<size_t, SparseVec> done;
    auto settle = [&](size_t p, const SparseVec& start) {
        SparseVec v = start;
        for (auto& [q, w] : done) {
            Rational c = sparse_get(v, q);
            if (!is_zero(c)) v = sparse_axpy(v, -c, w);
        }
        done.emplace(p, std::move(v));
    };
    if (rule_ == PivotRule::Lowest)
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) settle(it->first, it->second.v);
    else
        for (auto& [p, r] : rows_) settle(p, r.v);
    std::vector<SparseVec> out;
    for (auto& [p, v] : done) out.push_back(std::move(v));
    return out;
}

ColumnResult analyze_columns(const std::vector<SparseVec>& columns, PivotRule rule) {
    ColumnResult out;
    Echelon e(rule);
    for (size_t j = 0; j < columns.size(); ++j) {
        SparseVec rel;
        if (e.insert(columns[j], j, &rel)) {
            out.independent.push_back(j);
        } else {
            out.kernel.push_back(sparse_axpy(sparse_unit(j), -1, rel));
        }
    }
    out.rank = e.rank();
    return out;
}

size_t dense_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    size_t ncols = rows.front().size();
    // Clear denominators row by row so the elimination runs over Z.
    std::vector<std::vector<Integer>> a(rows.size(), std::vector<Integer>(ncols));
    for (size_t i = 0; i < rows.size(); ++i) {
        Integer l = 1;
        for (auto& x : rows[i]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        for (size_t j = 0; j < ncols; ++j) {
            Rational s = rows[i][j] * Rational(l);
            a[i][j] = s.get_num();
        }
    }
    size_t rank = 0;
    Integer prev = 1;
    for (size_t col = 0; col < ncols && rank < a.size(); ++col) {
        size_t piv = rank;
        while (piv < a.size() && a[piv][col] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (size_t i = rank + 1; i < a.size(); ++i) {
            for (size_t j = col + 1; j < ncols; ++j) {
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::vector<Rational>>> dense_inverse(std::vector<std::vector<Rational>> a) {
    const size_t n = a.size();
    std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, 0));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && is_zero(a[p][c])) ++p;
        if (p == n) return std::nullopt;
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

}  // namespace ldef
