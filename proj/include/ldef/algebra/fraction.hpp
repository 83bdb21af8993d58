#pragma once

#include "ldef/algebra/groebner.hpp"
#include "ldef/algebra/series.hpp"

#include <string>
#include <vector>

namespace ldef {

/// Element of the local ring at `base`: a polynomial fraction whose denominator is a unit there.
///
/// Stored reduced by the available gcd, with the denominator primitive over Z and positive at the base.
class LocalFraction {
public:
    LocalFraction() = default;
    /// Throws std::domain_error when den(base) = 0.
    LocalFraction(Poly num, Poly den, RationalVector base);
    static LocalFraction from_poly(Poly p, RationalVector base);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const RationalVector& base() const { return base_; }
    const RingPtr& ring() const { return num_.ring(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    Rational value_at_base() const;
    Rational evaluate(const RationalVector& point) const;

    LocalFraction operator-() const;
    LocalFraction operator+(const LocalFraction& o) const;
    LocalFraction operator-(const LocalFraction& o) const;
    LocalFraction operator*(const LocalFraction& o) const;
    /// Division by an element that is a unit at the base; throws otherwise.
    LocalFraction operator/(const LocalFraction& o) const;
    LocalFraction operator*(const Rational& c) const;

    /// Cross-multiplication equality.
    bool operator==(const LocalFraction& o) const;
    bool operator!=(const LocalFraction& o) const { return !(*this == o); }
    /// Cross-multiplication equality modulo an ideal given by a complete Groebner basis.
    bool equal_modulo(const LocalFraction& o, const std::vector<Poly>& basis) const;
    /// True when this/o is a unit at the base (both nonzero with matching vanishing there is not enough;
    /// the quotient must have nonzero value at the base).
    bool associate_of(const LocalFraction& o) const;

    /// "num" or "(num)/(den)" with integer coefficients; univariate denominators are shown factored
    /// over their rational roots.
    std::string to_string() const;

private:
    void normalize();

    Poly num_, den_;
    RationalVector base_;
};

/// Expansion around the base point in shifted coordinates (x - base), truncated at total degree `order`.
TruncatedSeries series_expand(const LocalFraction& f, unsigned order);

/// Splits a univariate polynomial as content * prod(linear factors) * rest, each factor primitive with
/// a positive constant term (or the variable itself). Coefficient sizes above 10^6 skip the root search.
struct LinearFactorization {
    Rational content;
    std::vector<Poly> factors;
    Poly rest;
};
LinearFactorization factor_rational_roots(const Poly& p);

}  // namespace ldef
