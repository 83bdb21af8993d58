#pragma once

#include "ldef/lie/lie_algebra.hpp"
#include "ldef/lie/cochain.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ldef {

/// Ordered torus weights alpha_1, alpha_2, ... with initialization n0 (1-based length of the first block).
struct WeightPath {
    size_t rank = 0;
    std::vector<Weight> weights;
    size_t n0 = 0;
    bool simple = true;  ///< every weight has multiplicity one

    size_t length() const { return weights.size(); }
    std::vector<Weight> prefix(size_t n) const;
};

/// i * alpha for i = 1..length, initialization 5.
WeightPath f_family_path(size_t length);
/// Four independent weights, their pairwise sums except (1,4), triple sums except (2,3,4), and the total sum.
WeightPath example52_path();

struct PathValidation {
    bool spans = false;       ///< the first n0 weights span the dual of the torus
    bool positive = false;    ///< some t has alpha_i(t) > 0 for every weight
    std::optional<Weight> witness;
    bool distinct = true;     ///< required when the path is declared simple
    bool non_difference = false;
    std::optional<size_t> difference_failure;  ///< 1-based index of the first weight in pi_{n} - pi_{n}
    /// "holds", "fails at n" or "unchecked" for nonempty open strata along the path.
    std::string strata = "unchecked";

    bool valid() const { return spans && positive && distinct && non_difference && strata.rfind("fails", 0) != 0; }
};

/// Checks the path conditions; the strata condition is checked on the quotients of `witness_law` when given
/// (its dimension must equal the path length).
PathValidation validate_weight_path(const WeightPath& path, const LieAlgebra* witness_law = nullptr);

/// A vector t with w(t) > 0 for all weights, by vertex enumeration of {t : w(t) >= 1}.
std::optional<Weight> positivity_witness(const std::vector<Weight>& weights);

}  // namespace ldef
