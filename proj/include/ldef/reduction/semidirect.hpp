#pragma once

#include "ldef/lie/catalog.hpp"
#include "ldef/lie/cochain.hpp"
#include "ldef/lie/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ldef {

/// g = R x n with basis e_1..e_n of n followed by the basis of R; [r_i, x] = delta_i x.
struct SemidirectData {
    LieAlgebra nilradical;
    DerivationSet action;  ///< delta_i = ad(r_i) restricted to n
    LieAlgebra reductive;  ///< brackets of R on its own basis
    LieAlgebra assembled;

    size_t n() const { return nilradical.dim(); }
    size_t r() const { return reductive.dim(); }
    /// ad(r_i) on g/n = R, one matrix per basis element of R.
    std::vector<Matrix> quotient_action() const;
};

/// Throws std::invalid_argument when some delta_i is not a derivation of n or [delta_i, delta_j] differs
/// from sum_k c_ij^k delta_k for the R-brackets c. R defaults to the abelian algebra of dimension |D|.
SemidirectData semidirect_assemble(const LieAlgebra& n, const DerivationSet& D,
                                   std::optional<LieAlgebra> R = std::nullopt);
/// T x n for the torus attached to a graded algebra.
SemidirectData torus_semidirect(const GradedAlgebra& g);

/// delta . f for an adjoint-valued cochain: delta f(x, ...) - sum f(..., delta x_p, ...).
Cochain derivation_act(const Matrix& delta, const Cochain& f);
bool is_invariant(const DerivationSet& D, const Cochain& f);

/// i(f): f on n^k, zero as soon as an argument lies in R. Throws on non-invariant input.
Cochain cochain_embed(const SemidirectData& S, const Cochain& f);
/// (s * f)(x_1, ..., x_k) = s f(s^-1 x_1, ..., s^-1 x_k) for an invertible matrix s.
Cochain transform_cochain(const Matrix& s, const Cochain& f);
/// diag(s, id_r): the gauge of g induced by a gauge of n.
Matrix extend_block(const Matrix& s, size_t r);

/// i_k: H^k(n, n)^R -> H^k(g, g) in the bases of the two cohomology reports.
struct InducedMap {
    unsigned degree = 0;
    size_t source_dim = 0;             ///< dim H^k(n, n)^R
    std::optional<size_t> target_dim;  ///< dim H^k(g, g), when computed
    size_t rank = 0;
    bool injective = false;
    std::optional<bool> surjective;     ///< requires target_dim
    std::vector<std::vector<Rational>> matrix;  ///< target_dim x source_dim, when computed
};

/// With `full_target` false, the image is only measured modulo B^k(g, g) and surjectivity is left open.
InducedMap induced_map(const SemidirectData& S, unsigned k, bool full_target = true);

enum class Prop32Case { TorusComplete, NoTorus, Neither };
std::string to_string(Prop32Case c);

struct ReductionOptions {
    bool full_h3 = false;  ///< also compute H^3(g, g) and the surjectivity of i_3
};

struct HypothesisReport {
    InducedMap i1, i2, i3;
    bool h1_epi = false;
    bool h2_iso = false;
    bool h3_mono = false;
    size_t h1_quotient = 0;  ///< dim H^1(n, g/n)^R
    size_t h2_quotient = 0;  ///< dim H^2(n, g/n)^R
    bool torus_part = false;  ///< center of R nonzero
    bool complete = false;    ///< center of g zero and every derivation inner
    Prop32Case prop32 = Prop32Case::Neither;

    bool hypotheses() const { return h1_epi && h2_iso && h3_mono; }
};

HypothesisReport check_reduction_hypotheses(const SemidirectData& S, const ReductionOptions& opt = {});

/// dim Z(g) = 0 and dim Der(g) = dim g.
bool is_complete(const LieAlgebra& g);

}  // namespace ldef
