#include "ldef/algebra/fraction.hpp"

#include <sstream>
#include <stdexcept>

namespace ldef {

namespace {

Integer lcm_of_denominators(const Poly& p) {
    Integer l = 1;
    for (auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    return l;
}

Integer gcd_of_numerators(const Poly& p) {
    Integer g = 0;
    for (auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    return g;
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> out;
    Integer a = abs(n);
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        out.push_back(d);
        if (d * d != a) out.push_back(a / d);
    }
    return out;
}

}  // namespace

LocalFraction::LocalFraction(Poly num, Poly den, RationalVector base)
    : num_(std::move(num)), den_(std::move(den)), base_(std::move(base)) {
    if (!num_.ring()) num_ = Poly(den_.ring());
    if (!same_ring(num_.ring(), den_.ring())) throw std::invalid_argument("fraction parts in different rings");
    if (base_.size() != den_.nvars()) throw std::invalid_argument("base point arity mismatch");
    if (ldef::is_zero(den_.evaluate(base_))) throw std::domain_error("denominator vanishes at the base point");
    normalize();
}

LocalFraction LocalFraction::from_poly(Poly p, RationalVector base) {
    RingPtr ring = p.ring();
    return LocalFraction(std::move(p), Poly::constant(ring, 1), std::move(base));
}

void LocalFraction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(den_.ring(), 1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *exact_divide(num_, g);
            den_ = *exact_divide(den_, g);
        }
    }
    // Denominator: integer coefficients with content 1, positive at the base.
    Rational scale = Rational(lcm_of_denominators(den_));
    Poly d = den_ * scale;
    scale /= Rational(gcd_of_numerators(d));
    if (sgn(den_.evaluate(base_) * scale) < 0) scale = -scale;
    den_ *= scale;
    num_ *= scale;
}

Rational LocalFraction::value_at_base() const { return num_.evaluate(base_) / den_.evaluate(base_); }

Rational LocalFraction::evaluate(const RationalVector& point) const {
    Rational d = den_.evaluate(point);
    if (ldef::is_zero(d)) throw std::domain_error("denominator vanishes at the evaluation point");
    return num_.evaluate(point) / d;
}

LocalFraction LocalFraction::operator-() const {
    LocalFraction r(*this);
    r.num_ = -r.num_;
    return r;
}

LocalFraction LocalFraction::operator+(const LocalFraction& o) const {
    if (den_ == o.den_) return LocalFraction(num_ + o.num_, den_, base_);
    return LocalFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_, base_);
}

LocalFraction LocalFraction::operator-(const LocalFraction& o) const { return *this + (-o); }

LocalFraction LocalFraction::operator*(const LocalFraction& o) const {
    return LocalFraction(num_ * o.num_, den_ * o.den_, base_);
}

LocalFraction LocalFraction::operator/(const LocalFraction& o) const {
    if (ldef::is_zero(o.num_.evaluate(base_))) throw std::domain_error("division by a non-unit of the local ring");
    return LocalFraction(num_ * o.den_, den_ * o.num_, base_);
}

LocalFraction LocalFraction::operator*(const Rational& c) const {
    LocalFraction r(*this);
    r.num_ *= c;
    if (ldef::is_zero(c)) r.den_ = Poly::constant(den_.ring(), 1);
    return r;
}

bool LocalFraction::operator==(const LocalFraction& o) const { return num_ * o.den_ == o.num_ * den_; }

bool LocalFraction::equal_modulo(const LocalFraction& o, const std::vector<Poly>& basis) const {
    return normal_form(num_ * o.den_ - o.num_ * den_, basis).is_zero();
}

bool LocalFraction::associate_of(const LocalFraction& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    Poly a = num_ * o.den_, b = o.num_ * den_;
    Poly g = poly_gcd(a, b);
    a = *exact_divide(a, g);
    b = *exact_divide(b, g);
    return !ldef::is_zero(a.evaluate(base_)) && !ldef::is_zero(b.evaluate(base_));
}

LinearFactorization factor_rational_roots(const Poly& p) {
    LinearFactorization out{Rational(1), {}, p};
    size_t var = 0;
    if (p.is_zero() || p.is_constant() || !is_univariate(p, &var)) {
        if (p.is_constant()) {
            out.content = p.constant_term();
            out.rest = Poly::constant(p.ring(), 1);
        }
        return out;
    }
    const RingPtr& ring = p.ring();
    Poly rest = p * Rational(lcm_of_denominators(p));
    rest = rest * (Rational(1) / Rational(gcd_of_numerators(rest)));
    Poly x = Poly::variable(ring, var);
    while (!rest.is_constant() && ldef::is_zero(rest.constant_term())) {
        out.factors.push_back(x);
        rest = *exact_divide(rest, x);
    }
    const Integer limit = 1000000;
    bool progress = true;
    while (progress && rest.total_degree() > 0) {
        progress = false;
        Integer a0 = rest.constant_term().get_num(), an = rest.leading_coef().get_num();
        if (abs(a0) > limit || abs(an) > limit) break;
        for (auto& num : positive_divisors(a0)) {
            for (auto& den : positive_divisors(an)) {
                for (int s : {1, -1}) {
                    Rational root(num * s, den);
                    root.canonicalize();
                    RationalVector pt(ring->nvars(), 0);
                    pt[var] = root;
                    if (!ldef::is_zero(rest.evaluate(pt))) continue;
                    // Factor (q x - p) scaled to positive constant term: (p - q x).
                    Poly f = Poly::constant(ring, Rational(root.get_num())) * Rational(-1) +
                             x * Rational(root.get_den());
                    if (sgn(f.constant_term()) < 0) f = -f;
                    auto q = exact_divide(rest, f);
                    if (!q) continue;
                    out.factors.push_back(f);
                    rest = *q;
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    if (rest.is_constant()) rest = Poly::constant(ring, 1);
    else if (sgn(rest.constant_term()) < 0) rest = -rest;
    Poly prod = rest;
    for (auto& f : out.factors) prod *= f;
    out.content = p.leading_coef() / prod.leading_coef();
    out.rest = rest;
    return out;
}

std::string LocalFraction::to_string() const {
    if (den_.is_constant()) {
        Poly n = num_ * (Rational(1) / den_.constant_term());
        return n.to_string();
    }
    Integer l = lcm_of_denominators(num_);
    Poly n = num_ * Rational(l);
    Poly d = den_ * Rational(l);
    std::ostringstream os;
    os << '(' << n.to_string() << ")/(";
    LinearFactorization f = factor_rational_roots(d);
    if (f.factors.size() + (f.rest.is_constant() ? 0 : 1) < 2 && f.content == 1) {
        os << d.to_string();
    } else {
        bool first = true;
        auto emit = [&](const std::string& s, bool paren) {
            if (!first) os << '*';
            first = false;
            if (paren) os << '(' << s << ')';
            else os << s;
        };
        if (f.content != 1) emit(ldef::to_string(f.content), sgn(f.content) < 0);
        for (auto& g : f.factors) emit(g.to_string(), g.size() > 1);
        if (!f.rest.is_constant()) emit(f.rest.to_string(), f.rest.size() > 1);
    }
    os << ')';
    return os.str();
}

TruncatedSeries series_expand(const LocalFraction& f, unsigned order) {
    Poly n = f.num().translate(f.base());
    Poly d = f.den().translate(f.base());
    TruncatedSeries sn = TruncatedSeries::from_poly(n, order);
    TruncatedSeries sd = TruncatedSeries::from_poly(d, order);
    return sn * sd.inverse();
}

}  // namespace ldef
