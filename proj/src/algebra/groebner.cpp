#include "ldef/algebra/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace ldef {

unsigned default_degree_cap() {
    if (const char* env = std::getenv("LDEF_DEGREE_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 100000) return static_cast<unsigned>(v);
    }
    return kDefaultDegreeCap;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis) {
    if (p.is_zero()) return p;
    Poly rest = p;
    std::vector<Term> remainder;
    while (!rest.is_zero()) {
        const Term lt = rest.leading();
        const Poly* div = nullptr;
        for (auto& g : basis) {
            if (g.is_zero()) continue;
            if (divides(g.leading().exp, lt.exp)) {
                div = &g;
                break;
            }
        }
        if (div) {
            Exponents e = exp_sub(lt.exp, div->leading().exp);
            rest -= div->mul_term(e, lt.coef / div->leading_coef());
        } else {
            remainder.push_back(lt);
            rest -= Poly::monomial(rest.ring(), lt.exp, lt.coef);
        }
    }
    return Poly::from_terms(p.ring(), std::move(remainder));
}

bool reduces_to_zero(const Poly& p, const std::vector<Poly>& basis) { return normal_form(p, basis).is_zero(); }

std::vector<Poly> interreduce(std::vector<Poly> basis) {
    basis.erase(std::remove_if(basis.begin(), basis.end(), [](const Poly& p) { return p.is_zero(); }), basis.end());
    // Drop elements whose leading monomial is divisible by another's.
    std::vector<Poly> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const auto& a = basis[j].leading().exp;
            const auto& b = basis[i].leading().exp;
            if (divides(a, b) && (a != b || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i].monic());
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        const Term lt = minimal[i].leading();
        Poly tail = minimal[i] - Poly::monomial(minimal[i].ring(), lt.exp, lt.coef);
        minimal[i] = Poly::monomial(minimal[i].ring(), lt.exp, lt.coef) + normal_form(tail, others);
    }
    if (!minimal.empty()) {
        const Ring& ring = *minimal.front().ring();
        std::sort(minimal.begin(), minimal.end(), [&](const Poly& a, const Poly& b) {
            return ring.compare(a.leading().exp, b.leading().exp) < 0;
        });
    }
    return minimal;
}

namespace {

Poly s_polynomial(const Poly& f, const Poly& g) {
    Exponents l = exp_lcm(f.leading().exp, g.leading().exp);
    Poly a = f.mul_term(exp_sub(l, f.leading().exp), Rational(1) / f.leading_coef());
    Poly b = g.mul_term(exp_sub(l, g.leading().exp), Rational(1) / g.leading_coef());
    return a - b;
}

bool coprime(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

}  // namespace

GroebnerResult groebner_basis(const std::vector<Poly>& generators, unsigned degree_cap) {
    GroebnerResult result;
    result.degree_cap = degree_cap;
    std::vector<Poly> g;
    RingPtr ring;
    for (auto& p : generators) {
        if (p.is_zero()) continue;
        if (!ring) ring = p.ring();
        else if (!same_ring(ring, p.ring())) throw std::invalid_argument("generators from different rings");
        g.push_back(p.monic());
    }
    if (ring) result.order_tag = ring->order_tag();
    if (g.empty()) return result;
    for (auto& p : g)
        if (p.is_constant()) {
            result.basis = {Poly::constant(ring, 1)};
            return result;
        }
    struct Pair {
        size_t i, j;
        unsigned degree;
        Exponents lcm;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<size_t, size_t>> done;
    auto add_pairs = [&](size_t k) {
        for (size_t i = 0; i < k; ++i) {
            Exponents l = exp_lcm(g[i].leading().exp, g[k].leading().exp);
            pairs.push_back({i, k, exp_degree(l), std::move(l)});
        }
    };
    for (size_t k = 1; k < g.size(); ++k) add_pairs(k);

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.degree != b.degree) return a.degree < b.degree;
            int c = ring->compare(a.lcm, b.lcm);
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        Pair pr = *best;
        pairs.erase(best);
        done.insert({pr.i, pr.j});
        const Exponents& li = g[pr.i].leading().exp;
        const Exponents& lj = g[pr.j].leading().exp;
        if (coprime(li, lj)) continue;
        bool chain = false;
        for (size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!divides(g[k].leading().exp, pr.lcm)) continue;
            auto key = [](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(pr.i, k)) && done.count(key(pr.j, k))) chain = true;
        }
        if (chain) continue;
        if (pr.degree > degree_cap) {
            result.complete = false;
            continue;
        }
        Poly r = normal_form(s_polynomial(g[pr.i], g[pr.j]), g);
        if (r.is_zero()) continue;
        r = r.monic();
        if (r.is_constant()) {
            result.basis = {Poly::constant(ring, 1)};
            return result;
        }
        g.push_back(r);
        add_pairs(g.size() - 1);
    }
    result.basis = interreduce(g);
    return result;
}

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)) {
    for (auto& p : generators) {
        if (p.is_zero()) continue;
        if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("ideal generator in a different ring");
        generators_.push_back(std::move(p));
    }
}

const GroebnerResult& PolyIdeal::basis(unsigned degree_cap) const {
    if (!cache_ || cache_->degree_cap != degree_cap) {
        cache_ = groebner_basis(generators_, degree_cap);
        if (cache_->order_tag.empty()) cache_->order_tag = ring_->order_tag();
    }
    return *cache_;
}

bool PolyIdeal::contains(const Poly& p, unsigned degree_cap) const {
    return reduces_to_zero(p, basis(degree_cap).basis);
}

}  // namespace ldef
