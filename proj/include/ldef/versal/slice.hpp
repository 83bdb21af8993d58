#pragma once

#include "ldef/algebra/elimination.hpp"
#include "ldef/lie/cohomology.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ldef {

/// Coordinates of the deformation problem: C^2 coordinates of the adjoint complex, restricted to the
/// weight-zero ones when a torus is given.
struct DeformationContext {
    LieAlgebra algebra;
    std::optional<DerivationSet> torus;
    std::shared_ptr<const CEComplex> complex;

    static DeformationContext make(const LieAlgebra& L, std::optional<DerivationSet> torus = std::nullopt);
    const std::vector<size_t>& coordinates() const { return complex->coordinates(2); }
    std::string coordinate_name(size_t idx) const;
    Rational base_value(size_t idx) const;
};

struct AdmissibleSet {
    std::vector<size_t> indices;  ///< C^2 coordinate indices, increasing
    size_t dim_B2 = 0;
    bool supplied = false;
};

/// Lowest pivots of an echelon basis of B^2 (invariant B^2 under a torus).
AdmissibleSet admissible_set(const DeformationContext& ctx);

struct AdmissibilityCheck {
    bool admissible = false;
    std::string reason;
};
/// |A| = dim B^2 and B^2 projects isomorphically onto the A-coordinates.
AdmissibilityCheck check_admissible(const DeformationContext& ctx, const std::vector<size_t>& indices);

/// Jacobi equations with X^a = phi_0^a for a in A, in shifted coordinates y_b = X^b - phi_0^b on B = I - A.
struct SlicePresentation {
    DeformationContext ctx;
    AdmissibleSet A;
    std::vector<size_t> free;           ///< the B coordinates, increasing; ring variable i is free[i]
    RingPtr ring;                       ///< variables named by coordinate names
    std::map<size_t, Poly> generators;  ///< keyed by C^3 coordinate index
    size_t tangent_dim = 0;             ///< dim of the kernel of the linear parts
    /// Essential coordinates: a subset of B projecting the tangent space isomorphically, chosen among the
    /// coordinates where phi_0 vanishes first, then in index order.
    std::vector<size_t> essential;

    std::vector<Poly> generator_list() const;
    QuotientPresentation quotient() const;
    std::vector<std::string> essential_names() const;
    size_t variable_of(size_t coordinate) const;
    /// Linear part of each generator as a sparse vector over ring variables, in generator order.
    std::vector<std::pair<size_t, SparseVec>> linear_parts() const;
};

/// Errors with std::invalid_argument when A is not admissible.
SlicePresentation slice_presentation(const DeformationContext& ctx, const AdmissibleSet& A);
SlicePresentation slice_presentation(const DeformationContext& ctx);

/// Local elimination of the non-essential coordinates.
LinearElimination eliminate_slice(const SlicePresentation& S);

}  // namespace ldef
