#include "sfd/quadfield.hpp"

#include <cctype>
#include <cstdlib>

namespace sfd {

namespace {

constexpr int kPrimes[3] = {2, 3, 5};

// Radicand of a basis mask: product of the primes selected by the mask.
int radicand(int mask) {
    int r = 1;
    for (int b = 0; b < 3; ++b)
        if (mask & (1 << b)) r *= kPrimes[b];
    return r;
}

int mask_of_radicand(int k) {
    for (int m = 0; m < 8; ++m)
        if (radicand(m) == k) return m;
    throw Error("not a valid radicand for Q(r2,r3,r5): " + std::to_string(k));
}

}  // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    size_t i = 0;
    auto digits = [&](size_t from) {
        size_t j = from;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        return j;
    };
    if (s[i] == '+' || s[i] == '-') ++i;
    size_t j = digits(i);
    if (j == i) throw ParseError("bad rational literal: " + s);
    if (j == s.size()) return Rational(Integer(s));
    if (s[j] != '/' || digits(j + 1) != s.size() || j + 1 == s.size())
        throw ParseError("bad rational literal: " + s);
    Integer num(s.substr(0, j)), den(s.substr(j + 1));
    if (den == 0) throw ParseError("zero denominator: " + s);
    Rational q(num, den);
    q.canonicalize();
    return q;
}

QuadField QuadField::sqrt_of(int k) {
    if (k == 1) return QuadField(1);
    return basis(mask_of_radicand(k));
}

QuadField QuadField::basis(int mask) {
    QuadField x;
    x.c_[mask & 7] = 1;
    return x;
}

bool QuadField::is_zero() const {
    for (const auto& v : c_)
        if (v != 0) return false;
    return true;
}

bool QuadField::is_rational() const {
    for (int m = 1; m < 8; ++m)
        if (c_[m] != 0) return false;
    return true;
}

Rational QuadField::rational_part_checked() const {
    if (!is_rational())
        throw Error("value is irrational: " + str());
    return c_[0];
}

QuadField QuadField::operator-() const {
    QuadField r;
    for (int m = 0; m < 8; ++m) r.c_[m] = -c_[m];
    return r;
}

QuadField& QuadField::operator+=(const QuadField& o) {
    for (int m = 0; m < 8; ++m) c_[m] += o.c_[m];
    return *this;
}

QuadField& QuadField::operator-=(const QuadField& o) {
    for (int m = 0; m < 8; ++m) c_[m] -= o.c_[m];
    return *this;
}

QuadField QuadField::operator*(const QuadField& o) const {
    QuadField r;
    for (int a = 0; a < 8; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; b < 8; ++b) {
            if (o.c_[b] == 0) continue;
            // basis(a)*basis(b) = radicand(a&b) * basis(a^b)
            Rational term = c_[a] * o.c_[b];
            int common = radicand(a & b);
            if (common != 1) term *= common;
            r.c_[a ^ b] += term;
        }
    }
    return r;
}

QuadField QuadField::conjugate(int prime) const {
    int bit;
    switch (prime) {
        case 2: bit = 0; break;
        case 3: bit = 1; break;
        case 5: bit = 2; break;
        default: throw Error("conjugate: prime must be 2, 3 or 5");
    }
    QuadField r = *this;
    for (int m = 0; m < 8; ++m)
        if (m & (1 << bit)) r.c_[m] = -r.c_[m];
    return r;
}

QuadField QuadField::inverse() const {
    if (is_zero()) throw Error("division by zero in Q(r2,r3,r5)");
    // Peel one sqrt at a time: x * conj_p(x) lives in the subfield without
    // sqrt(p), so 1/x = conj_2(x) * conj_3(y2) * conj_5(y3) / y5 with each
    // y the norm down one step.
    QuadField c2 = conjugate(2);
    QuadField y2 = *this * c2;            // in Q(r3,r5)
    QuadField c3 = y2.conjugate(3);
    QuadField y3 = y2 * c3;               // in Q(r5)
    QuadField c5 = y3.conjugate(5);
    QuadField y5 = y3 * c5;               // rational
    Rational n = y5.rational_part_checked();
    if (n == 0) throw Error("norm vanished on a nonzero element (bug)");
    QuadField r = c2 * c3 * c5;
    Rational inv_n = Rational(1) / n;
    for (int m = 0; m < 8; ++m) r.c_[m] *= inv_n;
    return r;
}

QuadField QuadField::parse(const std::string& text) {
    if (text.empty()) throw ParseError("empty field literal");
    QuadField out;
    size_t i = 0;
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            throw ParseError("expected '+' or '-' in field literal: " + text);
        }
        first = false;
        if (i >= text.size()) throw ParseError("dangling sign in field literal: " + text);

        Rational coeff = 1;
        bool have_coeff = false;
        size_t j = i;
        while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
            ++j;
        if (j > i) {
            coeff = parse_rational(text.substr(i, j - i));
            have_coeff = true;
            i = j;
        }
        int mask = 0;
        if (i < text.size() && text[i] == 'r') {
            ++i;
            size_t k = i;
            while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
            if (k == i) throw ParseError("bad radical in field literal: " + text);
            mask = mask_of_radicand(std::atoi(text.substr(i, k - i).c_str()));
            i = k;
        } else if (!have_coeff) {
            throw ParseError("bad term in field literal: " + text);
        }
        if (sign < 0) coeff = -coeff;
        out.c_[mask] += coeff;
    }
    return out;
}

std::string QuadField::str() const {
    // Emit terms in radicand order 1, 2, 3, 5, 6, 10, 15, 30.
    static const int order[8] = {0, 1, 2, 4, 3, 5, 6, 7};
    std::string out;
    for (int idx = 0; idx < 8; ++idx) {
        int m = order[idx];
        if (c_[m] == 0) continue;
        Rational v = c_[m];
        bool neg = v < 0;
        Rational av = neg ? Rational(-v) : v;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        std::string coeff = av.get_str();
        if (m == 0) {
            out += coeff;
        } else {
            if (av != 1) out += coeff;
            out += 'r';
            out += std::to_string(radicand(m));
        }
    }
    if (out.empty()) out = "0";
    return out;
}

}  // namespace sfd
