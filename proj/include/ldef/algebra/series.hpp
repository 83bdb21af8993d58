#pragma once

#include "ldef/algebra/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace ldef {

/// Ascending total degree, then lexicographically larger exponent first.
struct SeriesOrder {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Multivariate power series truncated at total degree `order`, exact rationals.
class TruncatedSeries {
public:
    using TermMap = std::map<Exponents, Rational, SeriesOrder>;

    TruncatedSeries() = default;
    TruncatedSeries(std::vector<std::string> params, unsigned order);

    static TruncatedSeries constant(std::vector<std::string> params, unsigned order, const Rational& c);
    static TruncatedSeries variable(std::vector<std::string> params, unsigned order, size_t index);
    /// Polynomial truncated at `order`; parameters are the ring variables.
    static TruncatedSeries from_poly(const Poly& p, unsigned order);

    const std::vector<std::string>& params() const { return params_; }
    size_t nparams() const { return params_.size(); }
    unsigned order() const { return order_; }
    const TermMap& terms() const { return terms_; }

    Rational coefficient(const Exponents& e) const;
    void set_coefficient(const Exponents& e, const Rational& c);
    Rational constant_term() const;
    bool is_zero() const { return terms_.empty(); }
    /// Lowest total degree carrying a nonzero coefficient; order()+1 for zero.
    unsigned valuation() const;
    TruncatedSeries homogeneous_part(unsigned degree) const;
    /// Same series truncated to a smaller order.
    TruncatedSeries truncated(unsigned order) const;

    TruncatedSeries operator-() const;
    TruncatedSeries operator+(const TruncatedSeries& o) const;
    TruncatedSeries operator-(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const TruncatedSeries& o) const;
    TruncatedSeries operator*(const Rational& c) const;
    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const TruncatedSeries& o) { return *this = *this * o; }
    /// Geometric-series inverse; throws when the constant term vanishes.
    TruncatedSeries inverse() const;
    TruncatedSeries pow(unsigned e) const;

    bool operator==(const TruncatedSeries& o) const;
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

    /// Polynomial of degree <= order in a ring over the parameter names.
    Poly to_poly(const RingPtr& ring) const;
    Rational evaluate(const RationalVector& point) const;
    std::string to_string() const;

private:
    void check(const TruncatedSeries& o) const;

    std::vector<std::string> params_;
    unsigned order_ = 0;
    TermMap terms_;
};

/// Evaluates p with each ring variable replaced by the matching series (all sharing params and order).
TruncatedSeries evaluate_poly(const Poly& p, const std::vector<TruncatedSeries>& values);

}  // namespace ldef
