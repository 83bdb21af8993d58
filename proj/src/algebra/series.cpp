#include "ldef/algebra/series.hpp"

#include <sstream>
#include <stdexcept>

namespace ldef {

bool SeriesOrder::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = exp_degree(a), db = exp_degree(b);
    if (da != db) return da < db;
    return a > b;
}

TruncatedSeries::TruncatedSeries(std::vector<std::string> params, unsigned order)
    : params_(std::move(params)), order_(order) {}

TruncatedSeries TruncatedSeries::constant(std::vector<std::string> params, unsigned order, const Rational& c) {
    TruncatedSeries s(std::move(params), order);
    s.set_coefficient(Exponents(s.nparams(), 0), c);
    return s;
}

TruncatedSeries TruncatedSeries::variable(std::vector<std::string> params, unsigned order, size_t index) {
    TruncatedSeries s(std::move(params), order);
    if (index >= s.nparams()) throw std::out_of_range("series parameter index out of range");
    Exponents e(s.nparams(), 0);
    e[index] = 1;
    s.set_coefficient(e, 1);
    return s;
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, unsigned order) {
    TruncatedSeries s(p.ring()->names(), order);
    for (auto& t : p.terms())
        if (exp_degree(t.exp) <= order) s.terms_[t.exp] += t.coef;
    return s;
}

Rational TruncatedSeries::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TruncatedSeries::set_coefficient(const Exponents& e, const Rational& c) {
    if (e.size() != nparams()) throw std::invalid_argument("series exponent arity mismatch");
    if (exp_degree(e) > order_) return;
    if (ldef::is_zero(c)) terms_.erase(e);
    else terms_[e] = c;
}

Rational TruncatedSeries::constant_term() const { return coefficient(Exponents(nparams(), 0)); }

unsigned TruncatedSeries::valuation() const {
    if (terms_.empty()) return order_ + 1;
    return exp_degree(terms_.begin()->first);
}

TruncatedSeries TruncatedSeries::homogeneous_part(unsigned degree) const {
    TruncatedSeries s(params_, order_);
    for (auto& [e, c] : terms_)
        if (exp_degree(e) == degree) s.terms_.emplace(e, c);
    return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
    TruncatedSeries s(params_, order);
    for (auto& [e, c] : terms_)
        if (exp_degree(e) <= order) s.terms_.emplace(e, c);
    return s;
}

void TruncatedSeries::check(const TruncatedSeries& o) const {
    if (params_ != o.params_ || order_ != o.order_) throw std::invalid_argument("series with different parameters or orders");
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries s(*this);
    for (auto& [e, c] : s.terms_) c = -c;
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    check(o);
    for (auto& [e, c] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) terms_.emplace(e, c);
        else {
            it->second += c;
            if (ldef::is_zero(it->second)) terms_.erase(it);
        }
    }
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) { return *this += -o; }

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    TruncatedSeries s(*this);
    s += o;
    return s;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
    TruncatedSeries s(*this);
    s -= o;
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    check(o);
    TruncatedSeries s(params_, order_);
    for (auto& [ea, ca] : terms_) {
        unsigned da = exp_degree(ea);
        for (auto& [eb, cb] : o.terms_) {
            if (da + exp_degree(eb) > order_) break;
            s.terms_[exp_add(ea, eb)] += ca * cb;
        }
    }
    for (auto it = s.terms_.begin(); it != s.terms_.end();) {
        if (ldef::is_zero(it->second)) it = s.terms_.erase(it);
        else ++it;
    }
    return s;
}

TruncatedSeries TruncatedSeries::operator*(const Rational& c) const {
    if (ldef::is_zero(c)) return TruncatedSeries(params_, order_);
    TruncatedSeries s(*this);
    for (auto& [e, v] : s.terms_) v *= c;
    return s;
}

TruncatedSeries TruncatedSeries::inverse() const {
    Rational c0 = constant_term();
    if (ldef::is_zero(c0)) throw std::domain_error("series inverse needs a nonzero constant term");
    // 1/(c0 (1 + u)) = (1/c0) sum (-u)^k with u of valuation >= 1.
    TruncatedSeries u = *this * (Rational(1) / c0);
    u.set_coefficient(Exponents(nparams(), 0), 0);
    TruncatedSeries result = constant(params_, order_, 1);
    TruncatedSeries power = constant(params_, order_, 1);
    for (unsigned k = 1; k <= order_; ++k) {
        power = power * (-u);
        if (power.is_zero()) break;
        result += power;
    }
    return result * (Rational(1) / c0);
}

TruncatedSeries TruncatedSeries::pow(unsigned e) const {
    TruncatedSeries r = constant(params_, order_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
}

bool TruncatedSeries::operator==(const TruncatedSeries& o) const {
    return params_ == o.params_ && order_ == o.order_ && terms_ == o.terms_;
}

Poly TruncatedSeries::to_poly(const RingPtr& ring) const {
    std::vector<Term> terms;
    for (auto& [e, c] : terms_) {
        Exponents x(ring->nvars(), 0);
        for (size_t i = 0; i < nparams(); ++i) {
            if (!e[i]) continue;
            auto idx = ring->index_of(params_[i]);
            if (!idx) throw std::invalid_argument("series parameter " + params_[i] + " missing from ring");
            x[*idx] = e[i];
        }
        terms.push_back({std::move(x), c});
    }
    return Poly::from_terms(ring, std::move(terms));
}

Rational TruncatedSeries::evaluate(const RationalVector& point) const {
    if (point.size() != nparams()) throw std::invalid_argument("series evaluation arity mismatch");
    Rational s = 0;
    for (auto& [e, c] : terms_) {
        Rational m = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) m *= point[i];
        s += m;
    }
    return s;
}

std::string TruncatedSeries::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c0] : terms_) {
        Rational c = c0;
        bool neg = sgn(c) < 0;
        if (neg) c = -c;
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        bool unit = exp_degree(e) == 0;
        bool wrote = false;
        if (unit || c != 1) {
            os << ldef::to_string(c);
            wrote = true;
        }
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (wrote) os << '*';
            os << params_[i];
            if (e[i] > 1) os << '^' << e[i];
            wrote = true;
        }
    }
    return os.str();
}

TruncatedSeries evaluate_poly(const Poly& p, const std::vector<TruncatedSeries>& values) {
    if (values.size() != p.nvars()) throw std::invalid_argument("evaluate_poly arity mismatch");
    if (values.empty()) throw std::invalid_argument("evaluate_poly needs at least one series value");
    const auto& params = values.front().params();
    unsigned order = values.front().order();
    std::vector<std::vector<TruncatedSeries>> powers(values.size());
    auto power = [&](size_t v, unsigned e) -> const TruncatedSeries& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(TruncatedSeries::constant(params, order, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * values[v]);
        return cache[e];
    };
    TruncatedSeries out(params, order);
    for (auto& t : p.terms()) {
        TruncatedSeries m = TruncatedSeries::constant(params, order, t.coef);
        for (size_t v = 0; v < t.exp.size(); ++v) {
            if (!t.exp[v]) continue;
            m = m * power(v, t.exp[v]);
            if (m.is_zero()) break;
        }
        out += m;
    }
    return out;
}

}  // namespace ldef
