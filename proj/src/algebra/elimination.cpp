#include "ldef/algebra/elimination.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ldef {

QuotientPresentation LinearElimination::quotient() const {
    return make_quotient(ring, generators, RationalVector(ring->nvars(), 0));
}

std::vector<Poly> coefficients_in(const Poly& p, size_t v) {
    std::vector<std::vector<Term>> parts(p.degree_in(v) + 1);
    for (auto& t : p.terms()) {
        Exponents e = t.exp;
        unsigned k = e[v];
        e[v] = 0;
        parts[k].push_back({std::move(e), t.coef});
    }
    std::vector<Poly> out;
    for (auto& terms : parts) out.push_back(Poly::from_terms(p.ring(), std::move(terms)));
    return out;
}

LocalFraction substitute_fractions(const Poly& p, const std::map<size_t, LocalFraction>& values,
                                   const RationalVector& base) {
    const RingPtr& ring = p.ring();
    LocalFraction acc = LocalFraction::from_poly(Poly(ring), base);
    std::map<std::pair<size_t, unsigned>, LocalFraction> powers;
    auto power = [&](size_t v, unsigned e) -> const LocalFraction& {
        for (unsigned k = 1; k <= e; ++k) {
            auto key = std::make_pair(v, k);
            if (powers.count(key)) continue;
            LocalFraction r = k == 1 ? values.at(v) : powers.at({v, k - 1}) * values.at(v);
            powers.emplace(key, std::move(r));
        }
        return powers.at({v, e});
    };
    // Group terms by their substituted part to limit fraction arithmetic.
    std::map<Exponents, Poly> groups;
    for (auto& t : p.terms()) {
        Exponents sub(t.exp.size(), 0), keep = t.exp;
        for (auto& [v, f] : values) {
            sub[v] = t.exp[v];
            keep[v] = 0;
        }
        auto it = groups.find(sub);
        Poly mono = Poly::monomial(ring, keep, t.coef);
        if (it == groups.end())
            groups.emplace(sub, mono);
        else
            it->second += mono;
    }
    for (auto& [sub, coef] : groups) {
        LocalFraction term = LocalFraction::from_poly(coef, base);
        for (size_t v = 0; v < sub.size(); ++v)
            if (sub[v] > 0) term = term * power(v, sub[v]);
        acc = acc + term;
    }
    return acc;
}

namespace {

struct Step {
    size_t var;
    Poly minus_r;
    Poly u;
};

}  // namespace

LinearElimination local_linear_elimination(const RingPtr& ring, std::vector<Poly> gens,
                                           const std::vector<std::string>& keep) {
    const size_t n = ring->nvars();
    std::vector<bool> protect(n, false), gone(n, false);
    for (auto& name : keep)
        if (auto idx = ring->index_of(name)) protect[*idx] = true;
    RationalVector origin(n, 0);
    for (auto& g : gens)
        if (!ldef::is_zero(g.evaluate(origin))) throw std::invalid_argument("generator does not vanish at the origin");
    gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Poly& g) { return g.is_zero(); }), gens.end());

    std::vector<Step> steps;
    while (true) {
        std::optional<std::pair<size_t, size_t>> pick;
        for (int pass = 0; pass < 2 && !pick; ++pass)
            for (size_t gi = 0; gi < gens.size() && !pick; ++gi)
                for (size_t v : gens[gi].support_variables()) {
                    if (protect[v] || gone[v] || gens[gi].degree_in(v) != 1) continue;
                    Poly u = coefficients_in(gens[gi], v)[1];
                    if (ldef::is_zero(u.constant_term())) continue;
                    if (pass == 0 && !u.is_constant()) continue;
                    pick = std::make_pair(gi, v);
                    break;
                }
        if (!pick) break;
        auto [gi, v] = *pick;
        auto parts = coefficients_in(gens[gi], v);
        Poly minus_r = -parts[0];
        Poly u = parts[1];
        gens.erase(gens.begin() + static_cast<long>(gi));
        std::vector<Poly> next;
        for (auto& h : gens) {
            unsigned D = h.degree_in(v);
            if (D == 0) {
                next.push_back(h);
                continue;
            }
            auto hk = coefficients_in(h, v);
            Poly acc(ring);
            for (unsigned k = 0; k <= D; ++k) {
                if (hk[k].is_zero()) continue;
                acc += hk[k] * minus_r.pow(k) * u.pow(D - k);
            }
            if (!acc.is_zero()) next.push_back(acc.primitive());
        }
        gens = std::move(next);
        gone[v] = true;
        steps.push_back({v, minus_r, u});
    }

    LinearElimination out;
    std::vector<std::string> names;
    for (size_t v = 0; v < n; ++v)
        if (!gone[v]) names.push_back(ring->name(v));
    out.ring = make_ring(names, ring->order(), 0);

    // Back substitution, latest elimination first.
    std::map<size_t, LocalFraction> vals;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        LocalFraction num = substitute_fractions(it->minus_r, vals, origin);
        LocalFraction den = substitute_fractions(it->u, vals, origin);
        vals.emplace(it->var, num / den);
    }
    RationalVector small(out.ring->nvars(), 0);
    for (auto& s : steps) {
        const LocalFraction& f = vals.at(s.var);
        out.eliminated.push_back(ring->name(s.var));
        out.values.emplace(ring->name(s.var), LocalFraction(f.num().to_ring(out.ring), f.den().to_ring(out.ring), small));
    }

    std::set<std::string> seen;
    for (auto& g : gens) {
        Poly p = g.to_ring(out.ring).primitive();
        if (seen.insert(p.to_string()).second) out.generators.push_back(p);
    }
    if (out.ring->nvars() == 1 && !out.generators.empty()) {
        Poly g = out.generators.front();
        for (size_t i = 1; i < out.generators.size(); ++i) g = poly_gcd(g, out.generators[i]);
        // Factors shared with a denominator vanish only outside the chart where the elimination is valid.
        for (auto& [name, f] : out.values) {
            if (f.is_polynomial()) continue;
            while (!g.is_zero()) {
                Poly c = poly_gcd(g, f.den());
                if (c.is_constant()) break;
                g = *exact_divide(g, c);
            }
        }
        out.generators = {g.primitive()};
    }
    return out;
}

}  // namespace ldef
