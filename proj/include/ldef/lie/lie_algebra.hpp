#pragma once

#include "ldef/algebra/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace ldef {

/// Structure constant key (i, j, k) with i < j, 0-based: [e_i, e_j] has coefficient c on e_k.
using BracketKey = std::array<size_t, 3>;

/// A Lie algebra given by sparse structure constants in a fixed basis.
class LieAlgebra {
public:
    LieAlgebra() = default;
    explicit LieAlgebra(size_t dim, std::vector<std::string> labels = {});

    size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(size_t i) const;

    /// Sets [e_i, e_j] coefficient on e_k; i > j is folded by antisymmetry, i == j must be zero.
    void set(size_t i, size_t j, size_t k, const Rational& c);
    void add(size_t i, size_t j, size_t k, const Rational& c);
    Rational get(size_t i, size_t j, size_t k) const;

    /// [e_i, e_j] as a sparse vector; antisymmetric in (i, j).
    const SparseVec& bracket(size_t i, size_t j) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    /// Nonzero constants, keyed with i < j.
    const std::map<BracketKey, Rational>& constants() const { return constants_; }
    bool is_abelian() const { return constants_.empty(); }

    /// Pairs (a < b) with [e_a, e_b] having a nonzero e_c component, with that coefficient.
    struct Source {
        size_t a, b;
        Rational coef;
    };
    const std::vector<Source>& sources(size_t c) const;

    bool operator==(const LieAlgebra& o) const { return dim_ == o.dim_ && constants_ == o.constants_; }

private:
    void rebuild() const;

    size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::map<BracketKey, Rational> constants_;
    mutable bool dirty_ = true;
    mutable std::vector<SparseVec> table_;
    mutable std::vector<std::vector<Source>> sources_;
};

/// Violated Jacobi components: (i < j < k, l) with the cyclic sum nonzero.
struct JacobiViolation {
    size_t i, j, k, l;
    Rational value;
};
std::vector<JacobiViolation> check_jacobi(const LieAlgebra& L);

/// Lower central series dimensions until stabilization.
std::vector<size_t> lower_central_series(const LieAlgebra& L);
bool is_nilpotent(const LieAlgebra& L);

/// Block product: g1 x g2 with the basis of g1 first.
LieAlgebra direct_product(const LieAlgebra& a, const LieAlgebra& b);

}  // namespace ldef
