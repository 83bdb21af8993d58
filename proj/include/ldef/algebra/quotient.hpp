#pragma once

#include "ldef/algebra/groebner.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ldef {

/// K[x]/I together with a rational point on V(I).
struct QuotientPresentation {
    RingPtr ring;
    PolyIdeal ideal;
    RationalVector base_point;
};

/// Throws std::invalid_argument when a generator does not vanish at the base point.
QuotientPresentation make_quotient(RingPtr ring, std::vector<Poly> generators, RationalVector base_point);

enum class DimKind { Finite, Infinite, Unknown };

struct KDimension {
    DimKind kind = DimKind::Unknown;
    std::uint64_t value = 0;  ///< meaningful when kind == Finite
    bool complete = true;     ///< false when a degree cap was reached

    bool finite() const { return kind == DimKind::Finite; }
    std::string to_string() const;
};

/// Number of standard monomials of the global quotient K[x]/I.
KDimension quotient_k_dimension(const QuotientPresentation& q, unsigned degree_cap = kDefaultDegreeCap);

/// Standard monomials of a monomial staircase; Infinite when some variable has no pure power.
KDimension staircase_size(const std::vector<Exponents>& leading, size_t nvars);

/// Translates `point` to the origin and removes unit factors that are detectable per generator:
/// a generator equal to a monomial times a polynomial with nonzero constant term is replaced by the
/// monomial, and univariate generators lose all factors not vanishing at the origin.
QuotientPresentation localize_at(const QuotientPresentation& q, const RationalVector& point);

/// Whether the base point is an isolated point of V(I), via saturations I : x_i^inf in shifted coordinates.
struct IsolationResult {
    bool isolated = false;
    bool complete = true;
};
IsolationResult is_isolated_point(const QuotientPresentation& q, unsigned degree_cap = kDefaultDegreeCap);

/// dim_K of the local ring of K[x]/I at the base point: Infinite when the point is not isolated,
/// otherwise the stable value of dim K[x]/(I + m^k).
KDimension local_k_dimension(const QuotientPresentation& q, unsigned degree_cap = kDefaultDegreeCap);

/// Smallest e with f^e in the ideal locally at the base point (e <= max_power), or 0 when not found.
unsigned local_nilpotency_order(const QuotientPresentation& q, const Poly& f, unsigned max_power,
                                unsigned degree_cap = kDefaultDegreeCap);

}  // namespace ldef
