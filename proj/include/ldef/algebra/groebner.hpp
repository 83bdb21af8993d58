#pragma once

#include "ldef/algebra/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ldef {

constexpr unsigned kDefaultDegreeCap = 20;

/// Degree cap from LDEF_DEGREE_CAP when set and valid, else kDefaultDegreeCap.
unsigned default_degree_cap();

struct GroebnerResult {
    std::vector<Poly> basis;  ///< reduced, monic, sorted by increasing leading monomial
    bool complete = true;     ///< false when an S-pair above the cap was skipped
    std::string order_tag;
    unsigned degree_cap = kDefaultDegreeCap;
};

/// Buchberger's algorithm in the ring's monomial order.
GroebnerResult groebner_basis(const std::vector<Poly>& generators, unsigned degree_cap = kDefaultDegreeCap);

/// Full reduction of p modulo the list (remainder of multivariate division).
Poly normal_form(const Poly& p, const std::vector<Poly>& basis);

/// Membership test; meaningful when the basis is complete.
bool reduces_to_zero(const Poly& p, const std::vector<Poly>& basis);

/// Reduced Groebner basis inter-reduction of an already complete basis.
std::vector<Poly> interreduce(std::vector<Poly> basis);

class PolyIdeal {
public:
    PolyIdeal() = default;
    PolyIdeal(RingPtr ring, std::vector<Poly> generators);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return generators_; }
    const GroebnerResult& basis(unsigned degree_cap = kDefaultDegreeCap) const;
    bool contains(const Poly& p, unsigned degree_cap = kDefaultDegreeCap) const;

private:
    RingPtr ring_;
    std::vector<Poly> generators_;
    mutable std::optional<GroebnerResult> cache_;
};

}  // namespace ldef
