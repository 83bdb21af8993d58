#pragma once

#include "ldef/lie/cochain.hpp"

#include <vector>

namespace ldef {

/// Dense square matrix; a linear map D acts by D e_i = sum_k D[k][i] e_k.
using Matrix = std::vector<std::vector<Rational>>;

Matrix zero_matrix(size_t n);
Matrix identity_matrix(size_t n);
Matrix diagonal_matrix(const std::vector<Rational>& d);
Matrix matmul(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
bool is_diagonal(const Matrix& a);

/// ad(e_i) as a matrix.
Matrix ad_matrix(const LieAlgebra& L, size_t i);

struct DerivationSet {
    size_t dim = 0;
    std::vector<Matrix> matrices;

    bool empty() const { return matrices.empty(); }
    size_t size() const { return matrices.size(); }
    bool is_diagonal() const;
    /// Per basis vector, the tuple of diagonal entries (the torus weights); requires is_diagonal().
    std::vector<Weight> weights() const;
    /// Diagonal torus with the given basis weights (rank = weight length).
    static DerivationSet torus(const std::vector<Weight>& weights);
};

bool is_derivation(const LieAlgebra& L, const Matrix& D);

/// Basis of Der(L), or of the centralizer of `commuting_with` inside Der(L).
DerivationSet derivations(const LieAlgebra& L, const DerivationSet* commuting_with = nullptr);

/// All diagonal derivations in the given basis (a torus); its weights grade L.
DerivationSet diagonal_derivations(const LieAlgebra& L);

/// Dimension of the span of a list of matrices.
size_t span_dimension(const std::vector<Matrix>& ms);

}  // namespace ldef
