#pragma once

#include "ldef/lie/derivation.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ldef {

struct CohomologyReport {
    unsigned degree = 0;
    size_t dim_C = 0, dim_Z = 0, dim_B = 0, dim_H = 0;
    std::vector<SparseVec> Z_basis;
    std::vector<SparseVec> B_basis;
    std::vector<SparseVec> B_preimages;  ///< B_basis[i] = d(B_preimages[i])
    std::vector<SparseVec> H_basis;      ///< cocycles completing B_basis to a basis of Z
    std::string invariance = "none";
};

/// Chevalley-Eilenberg complex C(L, V), optionally restricted to cochains killed by a set of derivations.
///
/// A diagonal derivation set restricts to weight-zero coordinates; any other set is imposed as linear
/// equations delta . f = 0, where delta acts on V through `module_action` (for the adjoint module the
/// derivation itself is used when `module_action` is empty).
class CEComplex {
public:
    CEComplex(const LieAlgebra& L, Module V, std::optional<DerivationSet> invariance = std::nullopt,
              std::vector<Matrix> module_action = {});
    static CEComplex adjoint(const LieAlgebra& L, std::optional<DerivationSet> invariance = std::nullopt);

    const LieAlgebra& algebra() const { return L_; }
    const Module& module() const { return V_; }
    bool coordinate_restricted() const { return !invariance_ || diagonal_; }
    std::string invariance_tag() const;

    /// Coordinates of C^k kept by the restriction (all of them when unrestricted); coordinate case only.
    const std::vector<size_t>& coordinates(unsigned k) const;
    /// Basis of the (invariant) subspace of C^k.
    const std::vector<SparseVec>& subspace(unsigned k) const;
    size_t dimension(unsigned k) const { return subspace(k).size(); }

    SparseVec d(unsigned k, const SparseVec& f) const;
    const SparseVec& d_column(unsigned k, size_t idx) const;

    CohomologyReport cohomology(unsigned k) const;
    /// Rank of d restricted to the (invariant) C^k.
    size_t rank_d(unsigned k) const;

private:
    LieAlgebra L_;
    Module V_;
    std::optional<DerivationSet> invariance_;
    std::vector<Matrix> module_action_;
    bool diagonal_ = false;
    std::vector<Weight> weights_, module_weights_;
    mutable std::map<unsigned, std::vector<size_t>> coords_;
    mutable std::map<unsigned, std::vector<SparseVec>> subspaces_;
    mutable std::map<std::pair<unsigned, size_t>, SparseVec> columns_;
};

/// Convenience entry point for adjoint coefficients.
CohomologyReport cohomology(const LieAlgebra& L, unsigned k, const DerivationSet* invariance = nullptr);

/// Partition of the (invariant) coordinates of C^k into B-, H- and W-parts.
struct HodgeSplit {
    unsigned degree = 0;
    std::vector<size_t> B_idx, H_idx, W_idx;  ///< coordinate indices of C^k
    std::vector<SparseVec> H_basis;           ///< cocycle with F-coordinates e_lambda for each lambda in H_idx
    std::vector<size_t> coordinates;          ///< all coordinates considered (invariant ones in the graded case)
};

/// W = greedy independent columns of d_k; on the remaining coordinates F, B = pivots of B^k projected to F,
/// H = F minus B.
HodgeSplit hodge_split(const CEComplex& C, unsigned k);

}  // namespace ldef
