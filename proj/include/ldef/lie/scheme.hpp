#pragma once

#include "ldef/algebra/poly.hpp"
#include "ldef/lie/cochain.hpp"

#include <map>

namespace ldef {

/// Jacobi polynomials J_{ijk}^l (i < j < k) of the law whose C^2 coordinate idx takes the value
/// values[idx] (absent coordinates are zero). Keyed by C^3 coordinate index; zero polynomials omitted.
std::map<size_t, Poly> jacobi_polynomials(size_t m, const std::map<size_t, Poly>& values);

}  // namespace ldef
