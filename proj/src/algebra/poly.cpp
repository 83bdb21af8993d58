#include "ldef/algebra/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ldef {

// ---------------------------------------------------------------- exponents

unsigned exp_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

bool divides(const Exponents& a, const Exponents& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// ---------------------------------------------------------------- ring

Ring::Ring(std::vector<std::string> names, MonomialOrder order, size_t block)
    : names_(std::move(names)), order_(order), block_(block) {
    for (size_t i = 0; i < names_.size(); ++i) {
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name: " + names_[i]);
    }
    if (block_ > names_.size()) throw std::invalid_argument("elimination block exceeds ring size");
}

std::optional<size_t> Ring::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::string Ring::order_tag() const {
    switch (order_) {
        case MonomialOrder::DegRevLex: return "degrevlex";
        case MonomialOrder::Lex: return "lex";
        case MonomialOrder::Elimination: return "elim(" + std::to_string(block_) + ")";
    }
    return "?";
}

namespace {

int degrevlex(const Exponents& a, const Exponents& b, size_t lo, size_t hi) {
    unsigned da = 0, db = 0;
    for (size_t i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0;
}

}  // namespace

int Ring::compare(const Exponents& a, const Exponents& b) const {
    switch (order_) {
        case MonomialOrder::DegRevLex: return degrevlex(a, b, 0, a.size());
        case MonomialOrder::Lex:
            for (size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
            return 0;
        case MonomialOrder::Elimination: {
            int c = degrevlex(a, b, 0, block_);
            if (c != 0) return c;
            return degrevlex(a, b, block_, a.size());
        }
    }
    return 0;
}

bool Ring::operator==(const Ring& other) const {
    return names_ == other.names_ && order_ == other.order_ && block_ == other.block_;
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order, size_t block) {
    return std::make_shared<const Ring>(std::move(names), order, block);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

// ---------------------------------------------------------------- poly

namespace {

struct DescendingOrder {
    const Ring* ring;
    bool operator()(const Exponents& a, const Exponents& b) const { return ring->compare(a, b) > 0; }
};

using TermMap = std::map<Exponents, Rational, DescendingOrder>;

std::vector<Term> to_terms(TermMap&& m) {
    std::vector<Term> out;
    out.reserve(m.size());
    for (auto& [e, c] : m)
        if (!is_zero(c)) out.push_back({e, c});
    return out;
}

}  // namespace

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly Poly::constant(RingPtr ring, const Rational& c) {
    Poly p(ring);
    if (!ldef::is_zero(c)) p.terms_.push_back({Exponents(ring->nvars(), 0), c});
    return p;
}

Poly Poly::variable(RingPtr ring, size_t index) {
    if (index >= ring->nvars()) throw std::out_of_range("variable index out of range");
    Exponents e(ring->nvars(), 0);
    e[index] = 1;
    return monomial(ring, e, 1);
}

Poly Poly::variable(RingPtr ring, std::string_view name) {
    auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable: " + std::string(name));
    return variable(ring, *idx);
}

Poly Poly::monomial(RingPtr ring, Exponents exp, const Rational& c) {
    if (exp.size() != ring->nvars()) throw std::invalid_argument("exponent arity mismatch");
    Poly p(ring);
    if (!ldef::is_zero(c)) p.terms_.push_back({std::move(exp), c});
    return p;
}

Poly Poly::from_terms(RingPtr ring, std::vector<Term> terms) {
    TermMap m(DescendingOrder{ring.get()});
    for (auto& t : terms) {
        if (t.exp.size() != ring->nvars()) throw std::invalid_argument("exponent arity mismatch");
        m[t.exp] += t.coef;
    }
    Poly p(ring);
    p.terms_ = to_terms(std::move(m));
    return p;
}

void Poly::check_ring(const Poly& o) const {
    if (!same_ring(ring_, o.ring_)) throw std::invalid_argument("polynomials from different rings");
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && exp_degree(terms_[0].exp) == 0); }

Rational Poly::constant_term() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    return exp_degree(last.exp) == 0 ? last.coef : Rational(0);
}

const Term& Poly::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, exp_degree(t.exp));
    return d;
}

unsigned Poly::min_degree() const {
    if (terms_.empty()) return 0;
    unsigned d = ~0u;
    for (auto& t : terms_) d = std::min(d, exp_degree(t.exp));
    return d;
}

unsigned Poly::degree_in(size_t var) const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, t.exp[var]);
    return d;
}

std::vector<size_t> Poly::support_variables() const {
    std::vector<size_t> out;
    for (size_t v = 0; v < nvars(); ++v)
        for (auto& t : terms_)
            if (t.exp[v] > 0) {
                out.push_back(v);
                break;
            }
    return out;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = exp_degree(terms_[0].exp);
    for (auto& t : terms_)
        if (exp_degree(t.exp) != d) return false;
    return true;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r(*this);
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r(*this);
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (!ring_) ring_ = o.ring_;
    check_ring(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
        int c;
        if (i == terms_.size()) c = -1;
        else if (j == o.terms_.size()) c = 1;
        else c = ring_->compare(terms_[i].exp, o.terms_[j].exp);
        if (c > 0) out.push_back(std::move(terms_[i++]));
        else if (c < 0) out.push_back(o.terms_[j++]);
        else {
            Rational s = terms_[i].coef + o.terms_[j].coef;
            if (!ldef::is_zero(s)) out.push_back({std::move(terms_[i].exp), s});
            ++i;
            ++j;
        }
    }
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator*(const Poly& o) const {
    if (terms_.empty() || o.terms_.empty()) return Poly(ring_ ? ring_ : o.ring_);
    check_ring(o);
    if (terms_.size() == 1) return o.mul_term(terms_[0].exp, terms_[0].coef);
    if (o.terms_.size() == 1) return mul_term(o.terms_[0].exp, o.terms_[0].coef);
    TermMap m(DescendingOrder{ring_.get()});
    Exponents e(nvars());
    for (auto& a : terms_)
        for (auto& b : o.terms_) {
            for (size_t v = 0; v < e.size(); ++v) e[v] = a.exp[v] + b.exp[v];
            auto it = m.find(e);
            if (it == m.end()) m.emplace(e, a.coef * b.coef);
            else it->second += a.coef * b.coef;
        }
    Poly r(ring_);
    r.terms_ = to_terms(std::move(m));
    return r;
}

Poly Poly::operator*(const Rational& c) const {
    if (ldef::is_zero(c)) return Poly(ring_);
    Poly r(*this);
    for (auto& t : r.terms_) t.coef *= c;
    return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }
Poly& Poly::operator*=(const Rational& c) { return *this = *this * c; }

Poly Poly::mul_term(const Exponents& exp, const Rational& c) const {
    Poly r(ring_);
    if (ldef::is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({exp_add(t.exp, exp), t.coef * c});
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(ring_, 1);
    Poly base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return result;
}

bool Poly::operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    if (terms_.empty()) return true;
    check_ring(o);
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
    return true;
}

Rational Poly::evaluate(const RationalVector& point) const {
    if (point.size() != nvars()) throw std::invalid_argument("evaluation point arity mismatch");
    Rational s = 0;
    for (auto& t : terms_) {
        Rational m = t.coef;
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            if (ldef::is_zero(point[v])) {
                m = 0;
                break;
            }
            Rational p;
            mpz_pow_ui(p.get_num_mpz_t(), point[v].get_num_mpz_t(), t.exp[v]);
            mpz_pow_ui(p.get_den_mpz_t(), point[v].get_den_mpz_t(), t.exp[v]);
            m *= p;
        }
        s += m;
    }
    return s;
}

Poly Poly::substitute(const std::map<size_t, Poly>& values, const RingPtr& target) const {
    bool own = same_ring(target, ring_);
    for (auto& [v, p] : values) {
        if (v >= nvars()) throw std::invalid_argument("substitution index out of range");
        if (!p.is_zero() && !same_ring(p.ring(), target)) throw std::invalid_argument("substitution value in wrong ring");
    }
    std::vector<Poly> images(nvars());
    std::vector<bool> have(nvars(), false);
    for (size_t v = 0; v < nvars(); ++v) {
        auto it = values.find(v);
        if (it != values.end()) {
            images[v] = it->second.is_zero() ? Poly(target) : it->second;
            have[v] = true;
        } else if (own) {
            images[v] = variable(target, v);
            have[v] = true;
        }
    }
    // Power cache per variable keeps repeated substitution cheap.
    std::vector<std::vector<Poly>> powers(nvars());
    auto power = [&](size_t v, unsigned e) -> const Poly& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    };
    Poly out(target);
    for (auto& t : terms_) {
        Poly m = constant(target, t.coef);
        for (size_t v = 0; v < nvars(); ++v) {
            if (t.exp[v] == 0) continue;
            if (!have[v]) throw std::invalid_argument("unassigned variable " + ring_->name(v) + " in substitution");
            m *= power(v, t.exp[v]);
            if (m.is_zero()) break;
        }
        out += m;
    }
    return out;
}

Poly Poly::translate(const RationalVector& shift) const {
    if (shift.size() != nvars()) throw std::invalid_argument("translation arity mismatch");
    std::map<size_t, Poly> values;
    for (size_t v = 0; v < nvars(); ++v)
        if (!ldef::is_zero(shift[v])) values.emplace(v, variable(ring_, v) + constant(ring_, shift[v]));
    if (values.empty()) return *this;
    return substitute(values);
}

Poly Poly::derivative(size_t var) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
        if (t.exp[var] == 0) continue;
        Term d{t.exp, t.coef * t.exp[var]};
        d.exp[var] -= 1;
        out.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(out));
}

Poly Poly::homogeneous_part(unsigned degree) const {
    Poly r(ring_);
    for (auto& t : terms_)
        if (exp_degree(t.exp) == degree) r.terms_.push_back(t);
    return r;
}

Poly Poly::truncate(unsigned max_degree) const {
    Poly r(ring_);
    for (auto& t : terms_)
        if (exp_degree(t.exp) <= max_degree) r.terms_.push_back(t);
    return r;
}

Poly Poly::to_ring(const RingPtr& target) const {
    if (same_ring(target, ring_)) return *this;
    std::vector<size_t> map(nvars(), 0);
    for (size_t v : support_variables()) {
        auto idx = target->index_of(ring_->name(v));
        if (!idx) throw std::invalid_argument("variable " + ring_->name(v) + " missing from target ring");
        map[v] = *idx;
    }
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        Exponents e(target->nvars(), 0);
        for (size_t v = 0; v < nvars(); ++v)
            if (t.exp[v]) e[map[v]] = t.exp[v];
        out.push_back({std::move(e), t.coef});
    }
    return from_terms(target, std::move(out));
}

Poly Poly::monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / leading_coef());
}

Poly Poly::primitive() const {
    if (terms_.empty()) return *this;
    Integer l = 1, g = 0;
    for (auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    for (auto& t : terms_) {
        Integer n = t.coef.get_num() * (l / t.coef.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (sgn(leading_coef()) < 0) scale = -scale;
    return *this * scale;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Rational c = t.coef;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool unit_mono = exp_degree(t.exp) == 0;
        bool wrote = false;
        if (unit_mono || c != 1) {
            os << ldef::to_string(c);
            wrote = true;
        }
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            if (wrote) os << '*';
            os << ring_->name(v);
            if (t.exp[v] > 1) os << '^' << t.exp[v];
            wrote = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument("polynomial parse error at " + std::to_string(pos_) + ": " + why + " in '" +
                                    std::string(s_) + "'");
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    Poly expr() {
        Poly acc(ring_);
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+')) ++pos_;
            else if (peek('-')) {
                sign = -1;
                ++pos_;
            } else if (!first) break;
            Poly t = term();
            acc += sign > 0 ? t : -t;
            first = false;
        }
        return acc;
    }
    Poly term() {
        Poly acc = factor();
        while (peek('*')) {
            ++pos_;
            acc *= factor();
        }
        return acc;
    }
    Poly factor() {
        Poly base = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
        }
        return base;
    }
    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            }
            return Poly::constant(ring_, parse_rational(s_.substr(start, pos_ - start)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            auto name = s_.substr(start, pos_ - start);
            auto idx = ring_->index_of(name);
            if (!idx) fail("unknown variable '" + std::string(name) + "'");
            return Poly::variable(ring_, *idx);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    RingPtr ring_;
    std::string_view s_;
    size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(RingPtr ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

// ---------------------------------------------------------------- division and gcd

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Poly q(a.ring() ? a.ring() : b.ring());
    if (a.is_zero()) return q;
    Poly r = a;
    const Term& lb = b.leading();
    Rational inv = Rational(1) / lb.coef;
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!divides(lb.exp, lr.exp)) return std::nullopt;
        Exponents e = exp_sub(lr.exp, lb.exp);
        Rational c = lr.coef * inv;
        q += Poly::monomial(r.ring(), e, c);
        r -= b.mul_term(e, c);
    }
    return q;
}

bool is_univariate(const Poly& p, size_t* var) {
    auto vars = p.support_variables();
    if (vars.size() > 1) return false;
    if (var) *var = vars.empty() ? static_cast<size_t>(-1) : vars[0];
    return true;
}

namespace {

using Dense = std::vector<Rational>;

Dense to_dense(const Poly& p, size_t var) {
    Dense d(p.degree_in(var) + 1);
    for (auto& t : p.terms()) d[t.exp[var]] += t.coef;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && is_zero(d.back())) d.pop_back();
}

Poly from_dense(const RingPtr& ring, const Dense& d, size_t var) {
    std::vector<Term> terms;
    for (size_t i = 0; i < d.size(); ++i) {
        if (is_zero(d[i])) continue;
        Exponents e(ring->nvars(), 0);
        if (i) e[var] = static_cast<unsigned>(i);
        terms.push_back({e, d[i]});
    }
    return Poly::from_terms(ring, std::move(terms));
}

Dense dense_rem(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
        trim(a);
    }
    return a;
}

Exponents monomial_content(const Poly& p) {
    Exponents m = p.terms().front().exp;
    for (auto& t : p.terms())
        for (size_t v = 0; v < m.size(); ++v) m[v] = std::min(m[v], t.exp[v]);
    return m;
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    const RingPtr& ring = a.ring() ? a.ring() : b.ring();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::constant(ring, 1);
    size_t va = 0, vb = 0;
    if (is_univariate(a, &va) && is_univariate(b, &vb) && va == vb) {
        Dense x = to_dense(a, va), y = to_dense(b, va);
        trim(x);
        trim(y);
        while (!y.empty()) {
            Dense r = dense_rem(x, y);
            x = std::move(y);
            y = std::move(r);
        }
        return from_dense(ring, x, va).monic();
    }
    Exponents ma = monomial_content(a), mb = monomial_content(b);
    Exponents m(ma.size());
    for (size_t v = 0; v < m.size(); ++v) m[v] = std::min(ma[v], mb[v]);
    Poly mono = Poly::monomial(ring, m, 1);
    Poly ra = *exact_divide(a, mono), rb = *exact_divide(b, mono);
    if (exact_divide(ra, rb)) return (mono * rb).monic();
    if (exact_divide(rb, ra)) return (mono * ra).monic();
    return mono;
}

Poly poly_substitute(const Poly& p, const Assignment& assignment) {
    std::map<size_t, Poly> values;
    for (auto& [name, value] : assignment) {
        auto idx = p.ring()->index_of(name);
        if (!idx) continue;
        if (!value.is_zero() && !same_ring(value.ring(), p.ring()))
            throw std::invalid_argument("assigned polynomial for " + name + " lives in a different ring");
        values.emplace(*idx, value.is_zero() ? Poly(p.ring()) : value);
    }
    return p.substitute(values);
}

Poly poly_substitute(const Poly& p, const RationalAssignment& assignment) {
    Assignment a;
    for (auto& [name, value] : assignment) a.emplace(name, Poly::constant(p.ring(), value));
    return poly_substitute(p, a);
}

}  // namespace ldef
