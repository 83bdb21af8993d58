#include "ldef/algebra/primes.hpp"

#include <set>
#include <stdexcept>

namespace ldef {

namespace {

void monomials_up_to(size_t nvars, unsigned cap, Exponents& cur, size_t v, unsigned left, std::vector<Exponents>& out) {
    if (v == nvars) {
        if (exp_degree(cur) > 0) out.push_back(cur);
        return;
    }
    for (unsigned e = 0; e <= left; ++e) {
        cur[v] = e;
        monomials_up_to(nvars, cap, cur, v + 1, left - e, out);
    }
    cur[v] = 0;
}

bool in_monomial_ideal(const Exponents& m, const std::vector<Exponents>& gens) {
    for (auto& g : gens)
        if (divides(g, m)) return true;
    return false;
}

}  // namespace

std::vector<MonomialPrime> monomial_primes(const QuotientPresentation& q, unsigned cap) {
    for (auto& x : q.base_point)
        if (!is_zero(x)) throw std::invalid_argument("monomial primes are enumerated at the origin");
    const size_t n = q.ring->nvars();
    std::vector<Exponents> monos;
    Exponents cur(n, 0);
    monomials_up_to(n, cap, cur, 0, cap, monos);
    if (monos.size() > 20) throw std::invalid_argument("too many monomials for exhaustive prime enumeration");

    std::vector<MonomialPrime> out;
    std::set<std::vector<Exponents>> seen;
    const size_t total = size_t(1) << monos.size();
    for (size_t mask = 1; mask < total; ++mask) {
        std::vector<Exponents> gens;
        for (size_t b = 0; b < monos.size(); ++b)
            if (mask >> b & 1) gens.push_back(monos[b]);
        // Minimal generators identify the ideal.
        std::vector<Exponents> minimal;
        for (auto& g : gens) {
            bool redundant = false;
            for (auto& h : gens)
                if (h != g && divides(h, g)) redundant = true;
            if (!redundant) minimal.push_back(g);
        }
        if (!seen.insert(minimal).second) continue;
        std::vector<Poly> basis;
        for (auto& m : minimal) basis.push_back(Poly::monomial(q.ring, m, 1));
        bool contains = true;
        for (auto& g : q.ideal.generators())
            if (!reduces_to_zero(g, basis)) contains = false;
        if (!contains) continue;
        bool prime = true;
        for (size_t a = 0; a < monos.size() && prime; ++a)
            for (size_t b = a; b < monos.size() && prime; ++b)
                if (in_monomial_ideal(exp_add(monos[a], monos[b]), minimal) && !in_monomial_ideal(monos[a], minimal) &&
                    !in_monomial_ideal(monos[b], minimal))
                    prime = false;
        if (!prime) continue;
        MonomialPrime p;
        p.generators = basis;
        KDimension d = staircase_size(minimal, n);
        p.maximal = d.finite() && d.value == 1;
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace ldef
