#pragma once

#include "ldef/algebra/fraction.hpp"
#include "ldef/algebra/quotient.hpp"

#include <map>
#include <string>
#include <vector>

namespace ldef {

/// Result of eliminating variables of the local ring at the origin.
struct LinearElimination {
    RingPtr ring;                     ///< remaining variables, in their original relative order
    std::vector<Poly> generators;     ///< in `ring`; they generate the same ideal of the local ring
    std::vector<std::string> eliminated;  ///< in elimination order
    /// Every eliminated variable as a fraction of the remaining ones, base point the origin.
    std::map<std::string, LocalFraction, std::less<>> values;

    QuotientPresentation quotient() const;
};

/// Coefficients of p as a polynomial in variable v: p = sum_k out[k] * v^k.
std::vector<Poly> coefficients_in(const Poly& p, size_t v);

/// Locally at the origin, repeatedly picks a generator g = u * x + r with x outside `keep`, r free of x and
/// u(0) != 0, substitutes x = -r/u into the other generators (cleared by powers of the unit u) and drops g.
/// Generators with a constant u are used first. A one-variable result is replaced by the gcd of its generators,
/// with factors common to the denominators of the eliminated values removed.
LinearElimination local_linear_elimination(const RingPtr& ring, std::vector<Poly> generators,
                                           const std::vector<std::string>& keep = {});

/// Evaluates p with some variables replaced by fractions (same ring and base point as the values).
LocalFraction substitute_fractions(const Poly& p, const std::map<size_t, LocalFraction>& values,
                                   const RationalVector& base);

}  // namespace ldef
