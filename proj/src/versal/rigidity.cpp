#include "ldef/versal/rigidity.hpp"

namespace ldef {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Rigid: return "rigid";
        case Verdict::NotRigid: return "not-rigid";
        default: return "unknown";
    }
}

RigidityReport rigidity_at(const LinearElimination& E, const RationalVector& point, unsigned degree_cap) {
    RigidityReport rep;
    rep.elimination = E;
    if (E.ring->nvars() == 0) {
        rep.local = E.quotient();
        rep.k_dimension = {DimKind::Finite, 1, true};
    } else {
        QuotientPresentation q = make_quotient(E.ring, E.generators, point);
        rep.local = localize_at(q, point);
        rep.k_dimension = local_k_dimension(rep.local, degree_cap);
    }
    rep.finite = rep.k_dimension.finite();
    rep.krull_zero = rep.finite;
    rep.verdict = rep.finite ? Verdict::Rigid
                             : rep.k_dimension.kind == DimKind::Infinite ? Verdict::NotRigid : Verdict::Unknown;
    return rep;
}

RigidityReport rigidity_test(const SlicePresentation& S, unsigned degree_cap) {
    LinearElimination E = eliminate_slice(S);
    return rigidity_at(E, RationalVector(E.ring->nvars(), 0), degree_cap);
}

}  // namespace ldef
