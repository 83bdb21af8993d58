#pragma once

#include "ldef/algebra/quotient.hpp"

#include <vector>

namespace ldef {

/// A monomial prime of K[x]/I: generated by monomials, containing I, prime up to the degree cap.
struct MonomialPrime {
    std::vector<Poly> generators;  ///< minimal monomial generators
    bool maximal = false;          ///< K[x]/P has k-dimension 1
};

/// All ideals generated by monomials of degree <= cap that contain I and pass the prime test
/// "ab in P implies a in P or b in P" on monomials of degree <= cap; the quotient's base point must be the origin.
std::vector<MonomialPrime> monomial_primes(const QuotientPresentation& q, unsigned cap = 3);

}  // namespace ldef
