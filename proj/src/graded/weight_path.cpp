#include "ldef/graded/weight_path.hpp"

#include "ldef/graded/graded_scheme.hpp"

#include <algorithm>
#include <set>

namespace ldef {

std::vector<Weight> WeightPath::prefix(size_t n) const {
    return std::vector<Weight>(weights.begin(), weights.begin() + static_cast<long>(std::min(n, weights.size())));
}

WeightPath f_family_path(size_t length) {
    WeightPath p;
    p.rank = 1;
    p.n0 = 5;
    for (size_t i = 1; i <= length; ++i) p.weights.push_back({Rational(static_cast<long>(i))});
    return p;
}

WeightPath example52_path() {
    WeightPath p;
    p.rank = 4;
    p.n0 = 4;
    auto sum = [](std::initializer_list<size_t> idx) {
        Weight w(4, 0);
        for (size_t i : idx) w[i - 1] += 1;
        return w;
    };
    for (size_t i = 1; i <= 4; ++i) p.weights.push_back(sum({i}));
    for (auto [i, j] : std::vector<std::pair<size_t, size_t>>{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}})
        p.weights.push_back(sum({i, j}));
    p.weights.push_back(sum({1, 2, 3}));
    p.weights.push_back(sum({1, 2, 4}));
    p.weights.push_back(sum({1, 3, 4}));
    p.weights.push_back(sum({1, 2, 3, 4}));
    return p;
}

namespace {

size_t weight_rank(const std::vector<Weight>& ws) {
    Echelon e;
    size_t tag = 0;
    for (auto& w : ws) {
        std::map<size_t, Rational> m;
        for (size_t r = 0; r < w.size(); ++r)
            if (!is_zero(w[r])) m[r] = w[r];
        e.insert(sparse_from_map(m), tag++);
    }
    return e.rank();
}

// Solves the square system M t = 1; empty when singular.
std::optional<std::vector<Rational>> solve_ones(std::vector<std::vector<Rational>> M) {
    const size_t k = M.size();
    for (auto& row : M) row.push_back(1);
    for (size_t c = 0; c < k; ++c) {
        size_t p = c;
        while (p < k && is_zero(M[p][c])) ++p;
        if (p == k) return std::nullopt;
        std::swap(M[p], M[c]);
        Rational s = 1 / M[c][c];
        for (auto& x : M[c]) x *= s;
        for (size_t r = 0; r < k; ++r) {
            if (r == c || is_zero(M[r][c])) continue;
            Rational f = M[r][c];
            for (size_t j = c; j <= k; ++j) M[r][j] -= f * M[c][j];
        }
    }
    std::vector<Rational> t(k);
    for (size_t i = 0; i < k; ++i) t[i] = M[i][k];
    return t;
}

}  // namespace

std::optional<Weight> positivity_witness(const std::vector<Weight>& weights) {
    if (weights.empty()) return Weight{};
    const size_t r = weights.front().size();
    // Columns spanning the column space keep every value w(t) reachable.
    std::vector<size_t> cols;
    Echelon ce;
    for (size_t c = 0; c < r; ++c) {
        std::map<size_t, Rational> m;
        for (size_t i = 0; i < weights.size(); ++i)
            if (!is_zero(weights[i][c])) m[i] = weights[i][c];
        if (ce.insert(sparse_from_map(m), c)) cols.push_back(c);
    }
    const size_t k = cols.size();
    if (k == 0) return std::nullopt;
    const size_t n = weights.size();
    std::vector<size_t> pick(k);
    for (size_t i = 0; i < k; ++i) pick[i] = i;
    const size_t cap = 200000;
    for (size_t tried = 0; tried < cap; ++tried) {
        std::vector<std::vector<Rational>> M;
        for (size_t i : pick) {
            std::vector<Rational> row;
            for (size_t c : cols) row.push_back(weights[i][c]);
            M.push_back(std::move(row));
        }
        if (auto t = solve_ones(M)) {
            bool ok = true;
            for (auto& w : weights) {
                Rational v = 0;
                for (size_t c = 0; c < k; ++c) v += w[cols[c]] * (*t)[c];
                if (v < 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                Weight full(r, 0);
                for (size_t c = 0; c < k; ++c) full[cols[c]] = (*t)[c];
                return full;
            }
        }
        // Next k-subset in lexicographic order.
        size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) return std::nullopt;
        ++pick[i - 1];
        for (size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return std::nullopt;
}

PathValidation validate_weight_path(const WeightPath& path, const LieAlgebra* witness_law) {
    PathValidation v;
    for (auto& w : path.weights)
        if (w.size() != path.rank) return v;
    v.spans = path.n0 <= path.length() && weight_rank(path.prefix(path.n0)) == path.rank;
    v.witness = positivity_witness(path.weights);
    v.positive = v.witness.has_value();
    if (path.simple) {
        std::set<Weight> seen(path.weights.begin(), path.weights.end());
        v.distinct = seen.size() == path.weights.size();
    }
    v.non_difference = true;
    for (size_t m = std::max<size_t>(path.n0, 1); m < path.length() && v.non_difference; ++m) {
        const Weight& a = path.weights[m];
        for (size_t i = 0; i < m && v.non_difference; ++i)
            for (size_t j = 0; j < m; ++j) {
                Weight d(path.rank);
                for (size_t r = 0; r < path.rank; ++r) d[r] = path.weights[i][r] - path.weights[j][r];
                if (d == a) {
                    v.non_difference = false;
                    v.difference_failure = m + 1;
                    break;
                }
            }
    }
    if (witness_law) {
        if (witness_law->dim() != path.length()) {
            v.strata = "fails: witness dimension differs from the path length";
            return v;
        }
        v.strata = "holds";
        for (size_t n = path.n0; n <= path.length(); ++n) {
            LieAlgebra Q(n);
            for (auto& [key, c] : witness_law->constants())
                if (key[0] < n && key[1] < n && key[2] < n) Q.set(key[0], key[1], key[2], c);
            if (!stratum_check(Q, path.prefix(n)).in_open_stratum) {
                v.strata = "fails at " + std::to_string(n);
                break;
            }
        }
    }
    return v;
}

}  // namespace ldef
