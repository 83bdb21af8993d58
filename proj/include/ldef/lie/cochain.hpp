#pragma once

#include "ldef/lie/lie_algebra.hpp"

#include <utility>
#include <vector>

namespace ldef {

using Tuple = std::vector<size_t>;

/// Sorts a tuple of distinct indices, returning the permutation sign; 0 when an index repeats.
int sort_with_sign(Tuple& t);

/// Basis of C^k(L, V): strictly increasing k-tuples in lexicographic order, then output index.
class CochainSpace {
public:
    CochainSpace(size_t m, unsigned k, size_t vdim);

    size_t m() const { return m_; }
    unsigned degree() const { return k_; }
    size_t vdim() const { return vdim_; }
    size_t ntuples() const { return ntuples_; }
    size_t size() const { return ntuples_ * vdim_; }

    /// Lexicographic rank of a strictly increasing tuple.
    size_t tuple_rank(const Tuple& t) const;
    Tuple tuple(size_t rank) const;
    size_t index(const Tuple& sorted, size_t out) const { return tuple_rank(sorted) * vdim_ + out; }
    size_t index_of_rank(size_t rank, size_t out) const { return rank * vdim_ + out; }
    std::pair<Tuple, size_t> at(size_t idx) const { return {tuple(idx / vdim_), idx % vdim_}; }

    /// Coordinate name X{i}_{j}...{out} with 1-based indices.
    std::string coordinate_name(size_t idx) const;

private:
    size_t m_;
    unsigned k_;
    size_t vdim_;
    size_t ntuples_;
    std::vector<std::vector<size_t>> binom_;
};

size_t binomial(size_t n, size_t k);

/// Representation of L on V: action[i][col] = rho(e_i)(v_col) as a sparse vector.
struct Module {
    size_t dim = 0;
    std::vector<std::vector<SparseVec>> action;

    static Module adjoint(const LieAlgebra& L);
    /// L acting by zero on K^vdim.
    static Module trivial(size_t algebra_dim, size_t vdim);
    bool is_trivial() const;
};

/// A k-cochain with values in a module of dimension vdim, coordinates in CochainSpace order.
struct Cochain {
    size_t m = 0;
    unsigned degree = 0;
    size_t vdim = 0;
    SparseVec comps;

    CochainSpace space() const { return CochainSpace(m, degree, vdim); }
    /// Value component on an arbitrary tuple of distinct indices (alternating extension).
    Rational value(Tuple t, size_t out) const;
    bool is_zero() const { return comps.empty(); }
    bool operator==(const Cochain& o) const {
        return m == o.m && degree == o.degree && vdim == o.vdim && comps == o.comps;
    }
};

/// The bracket of L as an adjoint 2-cochain.
Cochain bracket_cochain(const LieAlgebra& L);
LieAlgebra algebra_from_cochain(const Cochain& c);

/// d(e_idx) for the basis cochain idx of C^k(L, V).
SparseVec differential_column(const LieAlgebra& L, const Module& V, unsigned k, size_t idx);
SparseVec differential(const LieAlgebra& L, const Module& V, unsigned k, const SparseVec& f);
/// Adjoint-valued differential.
Cochain differential(const LieAlgebra& L, const Cochain& f);

/// f . g: insert g into the first argument of f, summed over shuffles.
Cochain compose(const Cochain& f, const Cochain& g);
/// [f, g] = f.g - (-1)^{(p-1)(q-1)} g.f.
Cochain nr_bracket(const Cochain& f, const Cochain& g);

Cochain cochain_add(const Cochain& a, const Cochain& b, const Rational& c = 1);

/// Weight of a cochain coordinate: out weight minus the sum of argument weights.
using Weight = std::vector<Rational>;
Weight coordinate_weight(const CochainSpace& s, size_t idx, const std::vector<Weight>& algebra_weights,
                         const std::vector<Weight>& module_weights);

}  // namespace ldef
