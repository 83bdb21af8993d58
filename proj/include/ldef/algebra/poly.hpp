#pragma once

#include "ldef/algebra/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ldef {

using Exponents = std::vector<unsigned>;

enum class MonomialOrder {
    DegRevLex,
    Lex,
    /// Degrevlex on the first `block` variables, ties broken by degrevlex on the rest.
    Elimination,
};

class Ring {
public:
    Ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::DegRevLex, size_t block = 0);

    size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(size_t i) const { return names_.at(i); }
    std::optional<size_t> index_of(std::string_view name) const;
    MonomialOrder order() const { return order_; }
    size_t block() const { return block_; }
    std::string order_tag() const;

    /// Sign of (a - b) in the monomial order.
    int compare(const Exponents& a, const Exponents& b) const;

    bool operator==(const Ring& other) const;

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
    size_t block_;
    std::map<std::string, size_t, std::less<>> index_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order = MonomialOrder::DegRevLex, size_t block = 0);

struct Term {
    Exponents exp;
    Rational coef;
};

/// Sparse polynomial over Q; terms kept sorted by decreasing monomial order.
class Poly {
public:
    Poly() = default;
    explicit Poly(RingPtr ring);

    static Poly constant(RingPtr ring, const Rational& c);
    static Poly variable(RingPtr ring, size_t index);
    static Poly variable(RingPtr ring, std::string_view name);
    static Poly monomial(RingPtr ring, Exponents exp, const Rational& c);
    static Poly from_terms(RingPtr ring, std::vector<Term> terms);
    static Poly parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    size_t nvars() const { return ring_ ? ring_->nvars() : 0; }
    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const Term& leading() const;
    Rational leading_coef() const { return leading().coef; }
    unsigned total_degree() const;
    unsigned min_degree() const;
    unsigned degree_in(size_t var) const;
    std::vector<size_t> support_variables() const;
    bool is_homogeneous() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rational& c) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly mul_term(const Exponents& exp, const Rational& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Rational evaluate(const RationalVector& point) const;
    /// Replaces variables by polynomials of the same target ring; unassigned variables map to themselves
    /// when `target` equals the own ring, otherwise they must be assigned.
    Poly substitute(const std::map<size_t, Poly>& values, const RingPtr& target) const;
    Poly substitute(const std::map<size_t, Poly>& values) const { return substitute(values, ring_); }
    /// x_i -> x_i + shift_i.
    Poly translate(const RationalVector& shift) const;
    Poly derivative(size_t var) const;
    Poly homogeneous_part(unsigned degree) const;
    Poly truncate(unsigned max_degree) const;
    /// Re-expresses the polynomial in a ring containing all of its support variables (matched by name).
    Poly to_ring(const RingPtr& target) const;
    Poly monic() const;
    /// Integer coefficients with gcd 1 and positive leading coefficient.
    Poly primitive() const;

    std::string to_string() const;

private:
    void check_ring(const Poly& o) const;
    void normalize_sorted();

    RingPtr ring_;
    std::vector<Term> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }

bool same_ring(const RingPtr& a, const RingPtr& b);
bool divides(const Exponents& a, const Exponents& b);
Exponents exp_lcm(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);
Exponents exp_add(const Exponents& a, const Exponents& b);
unsigned exp_degree(const Exponents& e);

/// Quotient of a by b when the division is exact.
std::optional<Poly> exact_divide(const Poly& a, const Poly& b);

/// Exact gcd when both inputs are univariate in the same variable; otherwise monomial content
/// combined with trial division of one input by the other. Result is monic.
Poly poly_gcd(const Poly& a, const Poly& b);
bool is_univariate(const Poly& p, size_t* var = nullptr);

using Assignment = std::map<std::string, Poly, std::less<>>;
using RationalAssignment = std::map<std::string, Rational, std::less<>>;

/// Substitutes named variables; names absent from the ring are ignored. Values must live in p's ring.
Poly poly_substitute(const Poly& p, const Assignment& assignment);
Poly poly_substitute(const Poly& p, const RationalAssignment& assignment);

}  // namespace ldef
