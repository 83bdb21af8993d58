#pragma once

#include "ldef/algebra/series.hpp"
#include "ldef/lie/cochain.hpp"

#include <map>
#include <string>
#include <vector>

namespace ldef {

/// phi = phi_0 + xi with xi a 2-cochain whose coefficients are series without constant term.
struct DeformationSeries {
    LieAlgebra base;
    std::vector<std::string> params;
    unsigned order = 1;
    std::map<size_t, TruncatedSeries> xi;  ///< keyed by C^2 coordinate index

    TruncatedSeries zero() const { return TruncatedSeries(params, order); }
    /// Full structure constant series for [e_i, e_j] on e_k (antisymmetric in i, j).
    TruncatedSeries constant(size_t i, size_t j, size_t k) const;
    TruncatedSeries perturbation(size_t idx) const;
    void set_perturbation(size_t idx, TruncatedSeries s);

    /// Nonzero Jacobi components J_{ijk}^l of phi, keyed by C^3 coordinate index, truncated at `order`.
    std::map<size_t, TruncatedSeries> jacobi_residual() const;
    bool satisfies_jacobi() const { return jacobi_residual().empty(); }
    /// Exact component-wise equality of the perturbations.
    bool operator==(const DeformationSeries& o) const;
};

DeformationSeries trivial_deformation(const LieAlgebra& base, std::vector<std::string> params, unsigned order);

/// s = id + (matrix with entries in the maximal ideal), one series per entry s[k][i].
struct GaugeTransform {
    size_t dim = 0;
    std::vector<std::string> params;
    unsigned order = 1;
    std::vector<std::vector<TruncatedSeries>> entries;

    static GaugeTransform identity(size_t dim, std::vector<std::string> params, unsigned order);
    /// id + L with L given by series entries (constant terms must vanish).
    static GaugeTransform from_perturbation(const std::vector<std::vector<TruncatedSeries>>& L);
    GaugeTransform inverse() const;
    GaugeTransform operator*(const GaugeTransform& o) const;
    bool is_identity() const;
    bool operator==(const GaugeTransform& o) const;
};

/// (s * phi)(x, y) = s phi(s^-1 x, s^-1 y), truncated at the common order.
DeformationSeries gauge_act(const GaugeTransform& s, const DeformationSeries& phi);

}  // namespace ldef
