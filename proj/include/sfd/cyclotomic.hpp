#pragma once

// Exact cyclotomic numbers: sparse rational combinations of powers of a
// primitive n-th root of unity, kept in a canonical reduced form.
//
// Canonical form: write n = prod p^{a_p}. An exponent e is *reduced* when,
// for every prime p | n, the top base-p digit of (e mod p^{a_p}) is not
// p - 1. Reduction repeatedly rewrites a term whose p-component has top
// digit p - 1 through the relation 1 + z^{n/p} + z^{2n/p} + ... = 0 applied
// inside the p-component (other components untouched, via CRT). The reduced
// exponents form a basis of Q(zeta_n), so the zero test is exact.

#include <map>
#include <string>
#include <vector>

#include "sfd/quadfield.hpp"
#include "sfd/rational.hpp"

namespace sfd {

class Cyclotomic {
public:
    // The zero element of Q(zeta_n).
    explicit Cyclotomic(long conductor = 1);
    // c * zeta_n^k.
    static Cyclotomic zeta_power(long n, long k, const Rational& c = Rational(1));
    static Cyclotomic from_rational(long n, const Rational& c);
    static Cyclotomic from_quadfield(const QuadField& x);

    long conductor() const { return n_; }
    const std::map<long, Rational>& terms() const { return c_; }

    bool is_zero() const { return c_.empty(); }
    bool is_rational() const;
    Rational rational_part_checked() const;

    // Re-expresses the element with conductor m (n must divide m).
    Cyclotomic embedded(long m) const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Galois action zeta -> zeta^j, gcd(j, n) = 1.
    Cyclotomic galois(long j) const;
    // Complex conjugation.
    Cyclotomic conj() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

    // Conversion into Q(r2, r3, r5); throws if the value lies outside it.
    QuadField to_quadfield() const;

    std::string str() const;

private:
    void add_term(long e, const Rational& c);
    void reduce();

    long n_ = 1;
    std::map<long, Rational> c_;
};

// Decomposition v = A + i B with A, B in Q(r2,r3,r5); throws when v lies
// outside Q(r2,r3,r5)(i).
std::pair<QuadField, QuadField> to_quadfield_pair(const Cyclotomic& v);

// Field literals for dataset files. The real grammar is the QuadField one;
// terms carrying a trailing 'i' contribute to the imaginary part, e.g.
// "-r3i" = -i*sqrt(3) (only ever needed for the D4 spin table).
std::string field_literal(const Cyclotomic& v);
Cyclotomic parse_field_literal(const std::string& text);

}  // namespace sfd
