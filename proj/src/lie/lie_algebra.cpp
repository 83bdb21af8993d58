#include "ldef/lie/lie_algebra.hpp"

#include <stdexcept>

namespace ldef {

LieAlgebra::LieAlgebra(size_t dim, std::vector<std::string> labels) : dim_(dim), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != dim_) throw std::invalid_argument("label count differs from dimension");
}

std::string LieAlgebra::label(size_t i) const {
    if (i < labels_.size()) return labels_[i];
    return "e" + std::to_string(i + 1);
}

void LieAlgebra::set(size_t i, size_t j, size_t k, const Rational& c) {
    if (i >= dim_ || j >= dim_ || k >= dim_) throw std::out_of_range("structure constant index out of range");
    if (i == j) {
        if (!is_zero(c)) throw std::invalid_argument("[e_i, e_i] must vanish");
        return;
    }
    Rational v = c;
    if (i > j) {
        std::swap(i, j);
        v = -v;
    }
    BracketKey key{i, j, k};
    if (is_zero(v)) constants_.erase(key);
    else constants_[key] = v;
    dirty_ = true;
}

void LieAlgebra::add(size_t i, size_t j, size_t k, const Rational& c) { set(i, j, k, get(i, j, k) + c); }

Rational LieAlgebra::get(size_t i, size_t j, size_t k) const {
    if (i == j) return 0;
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = constants_.find({i, j, k});
    if (it == constants_.end()) return 0;
    return flip ? Rational(-it->second) : it->second;
}

void LieAlgebra::rebuild() const {
    if (!dirty_) return;
    table_.assign(dim_ * dim_, {});
    sources_.assign(dim_, {});
    for (auto& [key, c] : constants_) {
        auto [i, j, k] = key;
        table_[i * dim_ + j].emplace_back(k, c);
        table_[j * dim_ + i].emplace_back(k, -c);
        sources_[k].push_back({i, j, c});
    }
    dirty_ = false;
}

const SparseVec& LieAlgebra::bracket(size_t i, size_t j) const {
    rebuild();
    return table_[i * dim_ + j];
}

SparseVec LieAlgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::map<size_t, Rational> acc;
    for (auto& [i, a] : x)
        for (auto& [j, b] : y)
            for (auto& [k, c] : bracket(i, j)) acc[k] += a * b * c;
    return sparse_from_map(acc);
}

const std::vector<LieAlgebra::Source>& LieAlgebra::sources(size_t c) const {
    rebuild();
    return sources_.at(c);
}

std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L) {
    std::vector<JacobiViolation> out;
    const size_t m = L.dim();
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            for (size_t k = j + 1; k < m; ++k) {
                std::map<size_t, Rational> acc;
                auto cyc = [&](size_t a, size_t b, size_t c) {
                    for (auto& [s, x] : L.bracket(a, b))
                        for (auto& [l, y] : L.bracket(s, c)) acc[l] += x * y;
                };
                cyc(i, j, k);
                cyc(j, k, i);
                cyc(k, i, j);
                for (auto& [l, v] : acc)
                    if (!is_zero(v)) out.push_back({i, j, k, l, v});
            }
    return out;
}

std::vector<size_t> lower_central_series(const LieAlgebra& L) {
    std::vector<size_t> dims{L.dim()};
    std::vector<SparseVec> basis;
    for (size_t i = 0; i < L.dim(); ++i) basis.push_back(sparse_unit(i));
    while (true) {
        Echelon next;
        std::vector<SparseVec> nb;
        size_t tag = 0;
        for (size_t i = 0; i < L.dim(); ++i)
            for (auto& v : basis) {
                SparseVec w = L.bracket(sparse_unit(i), v);
                if (!w.empty() && next.insert(w, tag++)) nb.push_back(w);
            }
        if (nb.size() == basis.size()) break;
        dims.push_back(nb.size());
        basis = std::move(nb);
        if (basis.empty()) break;
    }
    return dims;
}

bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back() == 0; }

LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b) {
    std::vector<std::string> labels;
    if (!a.labels().empty() || !b.labels().empty()) {
        for (size_t i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
        for (size_t i = 0; i < b.dim(); ++i) labels.push_back(b.label(i) + "'");
    }
    LieAlgebra p(a.dim() + b.dim(), labels);
    for (auto& [k, c] : a.constants()) p.set(k[0], k[1], k[2], c);
    for (auto& [k, c] : b.constants()) p.set(k[0] + a.dim(), k[1] + a.dim(), k[2] + a.dim(), c);
    return p;
}

}  // namespace ldef
