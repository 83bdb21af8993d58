#pragma once

#include "ldef/algebra/groebner.hpp"
#include "ldef/graded/weight_path.hpp"
#include "ldef/lie/derivation.hpp"

#include <string>
#include <vector>

namespace ldef {

/// X_{ij}^k with i < j and alpha_i + alpha_j = alpha_k, 0-based.
struct GradedPair {
    size_t i, j, k;
    auto operator<=>(const GradedPair&) const = default;
};
/// Jacobi component J_{ijk}^h with i < j < k and alpha_i + alpha_j + alpha_k = alpha_h.
struct GradedTriple {
    size_t i, j, k, h;
    auto operator<=>(const GradedTriple&) const = default;
};

struct GradedIndexSet {
    size_t n = 0;
    bool simple = true;
    std::vector<GradedPair> pairs;
    std::vector<GradedTriple> triples;

    /// X{i}_{j} for simple paths, X{i}_{j}_{k} otherwise (1-based).
    std::string name(const GradedPair& p) const;
    std::optional<size_t> find(size_t i, size_t j, size_t k) const;
};

GradedIndexSet graded_index_set(const std::vector<Weight>& weights);

struct GradedJacobiSystem {
    GradedIndexSet index;
    RingPtr ring;                   ///< one variable per graded pair
    std::vector<Poly> polynomials;  ///< one per graded triple, in triple order
};

GradedJacobiSystem graded_jacobi_system(const WeightPath& path, size_t n);

/// H_2(L)_beta = (ker phi~)_beta / Omega_beta on the weight-beta part of the exterior square.
struct WeightHomology {
    size_t dim = 0;
    size_t wedge_dim = 0;      ///< dim (L ^ L)_beta
    size_t kernel_dim = 0;     ///< dim (ker phi~)_beta
    size_t boundary_rank = 0;  ///< dim Omega_beta
    std::vector<std::pair<size_t, size_t>> wedges;  ///< basis e_a ^ e_b of (L ^ L)_beta
    std::vector<SparseVec> basis;                   ///< cycles over `wedges` completing Omega_beta
};

WeightHomology h2_weight_space(const LieAlgebra& L, const std::vector<Weight>& weights, const Weight& beta);

struct StratumReport {
    bool in_open_stratum = false;
    size_t der_T_dim = 0;  ///< derivations commuting with the torus
    size_t torus_dim = 0;
};

StratumReport stratum_check(const LieAlgebra& L, const std::vector<Weight>& weights);

/// Diagonal s with s_k / (s_i s_j) * L_{ij}^k = target for each listed coordinate. The exponent system is
/// solved on a square subsystem with the remaining scalings set to 1; absent when no rational solution is found.
std::optional<std::vector<Rational>> diagonal_normalization(const LieAlgebra& L, const std::vector<GradedPair>& A,
                                                            const std::vector<Rational>& target);
/// (s * L)_{ij}^k = s_k / (s_i s_j) L_{ij}^k.
LieAlgebra diagonal_act(const LieAlgebra& L, const std::vector<Rational>& s);

}  // namespace ldef
