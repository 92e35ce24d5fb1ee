#pragma once

// The real multiquadratic field Q(sqrt2, sqrt3, sqrt5).
//
// Elements are stored on the basis {1, r2, r3, r5, r6, r10, r15, r30} where
// rk denotes sqrt(k). Internally the basis is indexed by a 3-bit mask over
// the primes {2,3,5}: bit0 = sqrt2, bit1 = sqrt3, bit2 = sqrt5, so that
// basis(m) * basis(m') = (product of primes in m & m') * basis(m ^ m').
//
// This field contains every value the engine ever needs outside the
// character-table intermediates: root normalizations sqrt(1), sqrt(2),
// sqrt(6), basic spin traces, and all spin character values of the
// supported Weyl groups.

#include <array>
#include <cstdint>
#include <string>

#include "sfd/rational.hpp"

namespace sfd {

class QuadField {
public:
    QuadField() = default;
    QuadField(const Rational& r) { c_[0] = r; }              // NOLINT(implicit)
    QuadField(long n) { c_[0] = n; }                         // NOLINT(implicit)

    // The element sqrt(k) for k in {1,2,3,5,6,10,15,30}.
    static QuadField sqrt_of(int k);
    // Basis accessor by prime mask (see header comment).
    static QuadField basis(int mask);

    const Rational& coeff(int mask) const { return c_[mask]; }
    Rational& coeff(int mask) { return c_[mask]; }

    bool is_zero() const;
    bool is_rational() const;
    // The coefficient of 1 when the element is rational; throws otherwise.
    Rational rational_part_checked() const;
    // The coefficient of 1, irrational parts ignored.
    const Rational& rational_coeff() const { return c_[0]; }

    QuadField operator-() const;
    QuadField& operator+=(const QuadField& o);
    QuadField& operator-=(const QuadField& o);
    QuadField operator+(const QuadField& o) const { QuadField r = *this; return r += o; }
    QuadField operator-(const QuadField& o) const { QuadField r = *this; return r -= o; }
    QuadField operator*(const QuadField& o) const;
    QuadField& operator*=(const QuadField& o) { *this = *this * o; return *this; }

    // Galois conjugation flipping the sign of sqrt(p) for p in {2,3,5}.
    QuadField conjugate(int prime) const;
    // Multiplicative inverse; throws on zero.
    QuadField inverse() const;

    bool operator==(const QuadField& o) const { return c_ == o.c_; }
    bool operator!=(const QuadField& o) const { return !(*this == o); }

    // Field-literal grammar:
    //   sum  := term (('+'|'-') term)*
    //   term := rational ['r'k] | 'r'k          k in {2,3,5,6,10,15,30}
    // Examples: "-1+2r2", "r15", "3/2", "0".
    static QuadField parse(const std::string& text);
    std::string str() const;

private:
    std::array<Rational, 8> c_{};  // value-initialized to 0
};

inline QuadField operator*(const Rational& a, const QuadField& x) { return QuadField(a) * x; }

// Spec gate: the rational part if all irrational coefficients vanish,
// otherwise an error (used as a correctness gate on final Molien sums).
inline Rational quad_to_rational(const QuadField& x) { return x.rational_part_checked(); }

}  // namespace sfd
