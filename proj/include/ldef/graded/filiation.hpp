#pragma once

#include "ldef/algebra/elimination.hpp"
#include "ldef/graded/graded_scheme.hpp"
#include "ldef/versal/slice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ldef {

/// A family of graded laws over the local ring of a slice: every graded coordinate is a fraction in the
/// parameters, and the parameters are subject to `generators`. The base law sits at the origin.
struct GradedFamily {
    std::vector<Weight> weights;
    GradedIndexSet index;
    RingPtr ring;                              ///< parameters, shifted so the base point is the origin
    std::vector<LocalFraction> values;         ///< one per index.pairs entry
    std::vector<Poly> generators;              ///< relations among the parameters
    std::vector<GradedPair> admissible;        ///< coordinates frozen by the slice

    size_t dim() const { return weights.size(); }
    const std::vector<std::string>& parameters() const { return ring->names(); }
    const LocalFraction& value(size_t i, size_t j) const;
    std::optional<LocalFraction> value(const std::string& name) const;
    LieAlgebra law_at(const RationalVector& point) const;
    LieAlgebra base() const { return law_at(RationalVector(ring->nvars(), 0)); }
    DerivationSet torus() const { return DerivationSet::torus(weights); }
    /// The parameter ring with its relations, as eliminated data for the rigidity test.
    LinearElimination presentation() const;
    QuotientPresentation quotient() const;
};

/// Versal slice data of a graded law with the torus, renamed to graded coordinate names.
GradedFamily initial_family(const LieAlgebra& L, const std::vector<Weight>& weights);

/// The slice presentation at the base law for the family's admissible coordinates.
SlicePresentation family_slice(const GradedFamily& F);

enum class FiberCase { NoFiber, Unique, Parametric };
std::string to_string(FiberCase c);

struct ExtensionOptions {
    std::optional<std::pair<size_t, size_t>> pivot;  ///< 0-based (p, q); default: smallest admissible
    RationalAssignment pins;                          ///< new coordinates kept free, with base values
    bool simplify = true;                             ///< eliminate parameters with unit linear relations
};

struct ExtensionFiberReport {
    size_t n = 0;  ///< dimension before the step
    Weight beta;
    size_t nu = 0;         ///< dim H_2(phi_n)_beta at the base law
    size_t fiber_dim = 0;  ///< |M| - rank of the relations at the base law
    FiberCase kind = FiberCase::NoFiber;
    std::optional<GradedPair> pivot;
    std::vector<GradedPair> new_pairs;      ///< M
    std::vector<GradedTriple> relations;    ///< Lambda
    std::vector<std::string> solved;        ///< coordinates of M_1
    std::vector<std::string> new_parameters;
    size_t leftover = 0;                    ///< nonzero relations passed to the slice
    std::vector<std::string> eliminated;    ///< parameters removed by the simplification
    GradedFamily family;                    ///< family at n + 1; unset for NoFiber
};

/// Extension by a central e_{n+1} of weight beta with X_{pq}^{n+1} = 1, solving an invertible minor at the base.
ExtensionFiberReport central_extension_step(const GradedFamily& F, const Weight& beta, const ExtensionOptions& opt = {});

struct FiliationOptions {
    std::map<size_t, std::pair<size_t, size_t>> pivots;  ///< by new dimension, 0-based pairs
    std::map<size_t, RationalAssignment> pins;            ///< by new dimension
    bool simplify = true;
};

struct FiliationRun {
    std::vector<GradedFamily> families;  ///< dimensions n0 .. reached
    std::vector<ExtensionFiberReport> steps;
    bool halted = false;
    std::string message;
};

FiliationRun filiation_run(const LieAlgebra& initial, const WeightPath& path, size_t target,
                           const FiliationOptions& opt = {});

/// Pivots and pins producing the normalizations of the four-generator example.
FiliationOptions example52_options();
/// Filiation of the abelian algebra of dimension 4 along example52_path().
FiliationRun example52_run(size_t target = 13);

}  // namespace ldef
