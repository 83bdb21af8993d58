#include "ldef/algebra/quotient.hpp"

#include <set>
#include <stdexcept>

namespace ldef {

QuotientPresentation make_quotient(RingPtr ring, std::vector<Poly> generators, RationalVector base_point) {
    if (base_point.size() != ring->nvars()) throw std::invalid_argument("base point arity mismatch");
    for (auto& g : generators)
        if (!is_zero(g.evaluate(base_point)))
            throw std::invalid_argument("generator " + g.to_string() + " does not vanish at the base point");
    return {ring, PolyIdeal(ring, std::move(generators)), std::move(base_point)};
}

std::string KDimension::to_string() const {
    switch (kind) {
        case DimKind::Finite: return std::to_string(value);
        case DimKind::Infinite: return "infinite";
        case DimKind::Unknown: break;
    }
    return "unknown";
}

KDimension staircase_size(const std::vector<Exponents>& leading, size_t nvars) {
    KDimension out;
    for (auto& e : leading)
        if (exp_degree(e) == 0) {
            out.kind = DimKind::Finite;
            return out;
        }
    for (size_t v = 0; v < nvars; ++v) {
        bool pure = false;
        for (auto& e : leading) {
            bool only_v = e[v] > 0;
            for (size_t w = 0; w < nvars && only_v; ++w)
                if (w != v && e[w]) only_v = false;
            if (only_v) pure = true;
        }
        if (!pure) {
            out.kind = DimKind::Infinite;
            return out;
        }
    }
    auto standard = [&](const Exponents& m) {
        for (auto& e : leading)
            if (divides(e, m)) return false;
        return true;
    };
    std::set<Exponents> layer{Exponents(nvars, 0)};
    std::uint64_t count = 0;
    while (!layer.empty()) {
        count += layer.size();
        std::set<Exponents> next;
        for (auto& m : layer)
            for (size_t v = 0; v < nvars; ++v) {
                Exponents n = m;
                ++n[v];
                if (standard(n)) next.insert(std::move(n));
            }
        layer = std::move(next);
    }
    out.kind = DimKind::Finite;
    out.value = count;
    return out;
}

KDimension quotient_k_dimension(const QuotientPresentation& q, unsigned degree_cap) {
    const GroebnerResult& gb = q.ideal.basis(degree_cap);
    std::vector<Exponents> leading;
    for (auto& g : gb.basis) leading.push_back(g.leading().exp);
    KDimension d = staircase_size(leading, q.ring->nvars());
    if (!gb.complete) {
        d.complete = false;
        // An incomplete basis can only overcount the staircase.
        if (d.kind == DimKind::Infinite || d.kind == DimKind::Finite) d.kind = DimKind::Unknown;
    }
    return d;
}

namespace {

Poly strip_units(const Poly& g) {
    if (g.is_zero()) return g;
    const RingPtr& ring = g.ring();
    Exponents content(ring->nvars(), ~0u);
    for (auto& t : g.terms())
        for (size_t v = 0; v < content.size(); ++v) content[v] = std::min(content[v], t.exp[v]);
    Poly mono = Poly::monomial(ring, content, 1);
    Poly rest = *exact_divide(g, mono);
    if (!is_zero(rest.constant_term())) return mono;
    return g;
}

}  // namespace

QuotientPresentation localize_at(const QuotientPresentation& q, const RationalVector& point) {
    if (point.size() != q.ring->nvars()) throw std::invalid_argument("localization point arity mismatch");
    std::vector<Poly> gens;
    for (auto& g : q.ideal.generators()) {
        if (!is_zero(g.evaluate(point)))
            throw std::invalid_argument("localization point is not on the scheme: " + g.to_string());
        gens.push_back(strip_units(g.translate(point)));
    }
    return {q.ring, PolyIdeal(q.ring, std::move(gens)), RationalVector(q.ring->nvars(), 0)};
}

namespace {

std::vector<Poly> shifted_generators(const QuotientPresentation& q) {
    std::vector<Poly> gens;
    for (auto& g : q.ideal.generators()) gens.push_back(g.translate(q.base_point));
    return gens;
}

std::vector<Poly> power_of_maximal_ideal(const RingPtr& ring, unsigned k) {
    std::vector<Poly> out;
    std::set<Exponents> layer{Exponents(ring->nvars(), 0)};
    for (unsigned d = 0; d < k; ++d) {
        std::set<Exponents> next;
        for (auto& m : layer)
            for (size_t v = 0; v < ring->nvars(); ++v) {
                Exponents n = m;
                ++n[v];
                next.insert(std::move(n));
            }
        layer = std::move(next);
    }
    for (auto& e : layer) out.push_back(Poly::monomial(ring, e, 1));
    return out;
}

}  // namespace

IsolationResult is_isolated_point(const QuotientPresentation& q, unsigned degree_cap) {
    IsolationResult out{true, true};
    const size_t n = q.ring->nvars();
    if (n == 0) return out;
    std::vector<std::string> names{"_sat"};
    for (auto& s : q.ring->names()) names.push_back(s);
    RingPtr ext = make_ring(names, MonomialOrder::Elimination, 1);
    std::vector<Poly> base;
    for (auto& g : shifted_generators(q)) base.push_back(g.to_ring(ext));
    Poly y = Poly::variable(ext, 0);
    for (size_t i = 0; i < n; ++i) {
        std::vector<Poly> gens = base;
        gens.push_back(Poly::constant(ext, 1) - y * Poly::variable(ext, i + 1));
        GroebnerResult gb = groebner_basis(gens, degree_cap);
        if (!gb.complete) out.complete = false;
        bool escapes = false;
        for (auto& g : gb.basis)
            if (g.degree_in(0) == 0 && !is_zero(g.constant_term())) escapes = true;
        if (!escapes) out.isolated = false;
    }
    return out;
}

KDimension local_k_dimension(const QuotientPresentation& q, unsigned degree_cap) {
    KDimension out;
    IsolationResult iso = is_isolated_point(q, degree_cap);
    if (!iso.isolated) {
        out.kind = iso.complete ? DimKind::Infinite : DimKind::Unknown;
        out.complete = iso.complete;
        return out;
    }
    std::vector<Poly> gens = shifted_generators(q);
    std::uint64_t previous = 0;
    for (unsigned k = 1; k <= degree_cap + 1; ++k) {
        std::vector<Poly> all = gens;
        for (auto& m : power_of_maximal_ideal(q.ring, k)) all.push_back(m);
        GroebnerResult gb = groebner_basis(all, degree_cap);
        std::vector<Exponents> leading;
        for (auto& g : gb.basis) leading.push_back(g.leading().exp);
        KDimension dk = staircase_size(leading, q.ring->nvars());
        if (k > 1 && dk.value == previous) {
            out.kind = DimKind::Finite;
            out.value = previous;
            out.complete = iso.complete;
            return out;
        }
        previous = dk.value;
    }
    out.kind = DimKind::Unknown;
    out.complete = false;
    return out;
}

unsigned local_nilpotency_order(const QuotientPresentation& q, const Poly& f, unsigned max_power,
                                unsigned degree_cap) {
    KDimension d = local_k_dimension(q, degree_cap);
    if (!d.finite()) return 0;
    // The local ring equals K[x]/(I + m^k) once m^k lies in I locally; k = dim + 1 suffices.
    std::vector<Poly> all = shifted_generators(q);
    for (auto& m : power_of_maximal_ideal(q.ring, static_cast<unsigned>(d.value) + 1)) all.push_back(m);
    GroebnerResult gb = groebner_basis(all, degree_cap);
    Poly g = f.translate(q.base_point);
    Poly power = Poly::constant(q.ring, 1);
    for (unsigned e = 1; e <= max_power; ++e) {
        power = normal_form(power * g, gb.basis);
        if (power.is_zero()) return e;
    }
    return 0;
}

}  // namespace ldef
