#pragma once

#include "ldef/lie/deformation.hpp"
#include "ldef/versal/slice.hpp"

#include <map>
#include <string>
#include <vector>

namespace ldef {

/// phi_0 + h + g(h) on the slice, with h indexed by the essential coordinates.
struct MaurerCartanSolution {
    std::vector<size_t> essential;       ///< C^2 coordinates carrying the parameters
    std::vector<std::string> params;     ///< parameter names (the essential coordinate names)
    std::map<size_t, TruncatedSeries> g; ///< remaining free coordinates as series
    std::vector<size_t> equation_rows;   ///< C^3 coordinates where the B^3 part is solved
    std::vector<size_t> obstruction_rows;///< C^3 coordinates carrying the H^3 components
    std::vector<TruncatedSeries> obstruction;
    unsigned order = 1;
    bool terminated = false;  ///< g and obstruction vanish in the last two degrees
    bool exact = false;       ///< terminated, and the polynomial g satisfies all slice equations exactly

    /// The full perturbation xi of phi_0 (zero on the admissible coordinates).
    DeformationSeries deformation(const SlicePresentation& S) const;
    /// Value of a free coordinate X = phi_0 + y as a series.
    TruncatedSeries coordinate(const SlicePresentation& S, size_t idx) const;
};

MaurerCartanSolution solve_versal(const SlicePresentation& S, unsigned order);

struct NormalizedDeformation {
    GaugeTransform gauge;  ///< gauge_act(gauge, input) == output
    DeformationSeries output;
};

/// Gauge by id + W^1 order by order until the admissible coordinates equal their phi_0 values.
NormalizedDeformation normalize_to_slice(const DeformationSeries& phi, const SlicePresentation& S);

/// The complement W^1 used by normalize_to_slice: C^1 coordinates whose differentials on A are independent.
std::vector<size_t> gauge_complement(const SlicePresentation& S);

}  // namespace ldef
