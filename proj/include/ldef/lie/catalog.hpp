#pragma once

#include "ldef/lie/derivation.hpp"

#include <string>

namespace ldef {

/// A Lie algebra with an optional grading torus given by basis weights.
struct GradedAlgebra {
    LieAlgebra algebra;
    std::vector<Weight> weights;  ///< empty when no torus is attached

    DerivationSet torus() const { return DerivationSet::torus(weights); }
};

/// [e1, ei] = e_{i+1} (i <= n-1), [e2, ei] = e_{i+2} (2 < i < n-1); weights i.
GradedAlgebra f_family(size_t n);
/// [ei, ej] = (j - i) e_{i+j} for i + j <= n; weights i.
GradedAlgebra witt(size_t n);
GradedAlgebra heisenberg();
GradedAlgebra abelian(size_t m);
/// Basis h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h.
GradedAlgebra sl2();

}  // namespace ldef
