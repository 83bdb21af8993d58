#pragma once

#include "ldef/versal/slice.hpp"

#include <string>

namespace ldef {

enum class Verdict { Rigid, NotRigid, Unknown };
std::string to_string(Verdict v);

struct RigidityReport {
    KDimension k_dimension;  ///< dim_K of the local slice ring
    bool finite = false;
    bool krull_zero = false;
    Verdict verdict = Verdict::Unknown;
    LinearElimination elimination;
    QuotientPresentation local;  ///< localized presentation after elimination
};

/// Formal rigidity: the local ring of the slice at phi_0 has Krull dimension zero (finite k-dimension).
RigidityReport rigidity_test(const SlicePresentation& S, unsigned degree_cap = kDefaultDegreeCap);

/// Same test for an already eliminated presentation at a point of its zero set.
RigidityReport rigidity_at(const LinearElimination& E, const RationalVector& point, unsigned degree_cap = kDefaultDegreeCap);

}  // namespace ldef
