#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace ldef {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise, always in lowest terms.
std::string to_string(const Rational& q);

/// p/q in lowest terms.
inline Rational make_rational(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_one(const Rational& q) { return q == 1; }

using RationalVector = std::vector<Rational>;

}  // namespace ldef
