#pragma once

// Exact scalar arithmetic. Integers and rationals are GMP-backed: mpq_class
// keeps fractions reduced with a positive denominator, which is exactly the
// Rational contract this engine relies on (zero is 0/1).

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "sfd/error.hpp"

namespace sfd {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline Integer to_integer(const Rational& q) {
    if (!is_integer(q)) throw Error("expected an integer, got " + q.get_str());
    return q.get_num();
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Integer& n) { return n.get_str(); }

// Parses "int" or "int/posint". Rejects anything else.
Rational parse_rational(const std::string& s);

}  // namespace sfd
