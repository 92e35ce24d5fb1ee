#pragma once

// Dense univariate polynomials and truncated power series over an exact
// coefficient ring. Polynomials never store trailing zeros; the zero
// polynomial has degree kZeroDegree. Series carry a fixed truncation order
// and never read or write beyond it.

#include <algorithm>
#include <string>
#include <vector>

#include "sfd/quadfield.hpp"
#include "sfd/rational.hpp"

namespace sfd {

inline constexpr int kZeroDegree = -1;  // degree sentinel of the zero polynomial

template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial one() { return Polynomial({T(1)}); }
    // The monomial a * t^k.
    static Polynomial monomial(T a, int k) {
        std::vector<T> v(k + 1);
        v[k] = std::move(a);
        return Polynomial(std::move(v));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    // Coefficient of t^k (zero beyond the degree).
    T coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[k];
    }
    const std::vector<T>& coeffs() const { return c_; }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] += o.c_[i];
        }
        return Polynomial(std::move(v));
    }
    Polynomial operator-(const Polynomial& o) const {
        std::vector<T> v(std::max(c_.size(), o.c_.size()));
        for (size_t i = 0; i < v.size(); ++i) {
            if (i < c_.size()) v[i] += c_[i];
            if (i < o.c_.size()) v[i] -= o.c_[i];
        }
        return Polynomial(std::move(v));
    }
    Polynomial operator-() const {
        std::vector<T> v(c_.size());
        for (size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
        return Polynomial(std::move(v));
    }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<T> v(c_.size() + o.c_.size() - 1);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == T(0)) continue;
            for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
        }
        return Polynomial(std::move(v));
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Exact division; throws if the remainder is nonzero or divisor is zero.
    Polynomial divide_exact(const Polynomial& d) const {
        if (d.is_zero()) throw Error("polynomial division by zero");
        std::vector<T> rem = c_, q(std::max<int>(degree() - d.degree() + 1, 0));
        const T& lead = d.c_.back();
        for (int k = static_cast<int>(rem.size()) - 1; k >= d.degree(); --k) {
            if (rem[k] == T(0)) continue;
            T f = rem[k] / lead;
            q[k - d.degree()] = f;
            for (int i = 0; i <= d.degree(); ++i) rem[k - d.degree() + i] -= f * d.c_[i];
        }
        for (const auto& r : rem)
            if (r != T(0)) throw Error("polynomial division is not exact");
        return Polynomial(std::move(q));
    }

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = 0; k <= degree(); ++k) {
            if (c_[k] == T(0)) continue;
            std::string cs = coeff_str(c_[k]);
            bool neg = !cs.empty() && cs[0] == '-';
            if (out.empty()) {
                if (neg) { out += "-"; cs = cs.substr(1); }
            } else {
                out += neg ? " - " : " + ";
                if (neg) cs = cs.substr(1);
            }
            if (k == 0) {
                out += cs;
            } else {
                if (cs != "1") out += cs + "*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    static std::string coeff_str(const Integer& v) { return v.get_str(); }
    static std::string coeff_str(const Rational& v) { return v.get_str(); }
    static std::string coeff_str(const QuadField& v) { return v.str(); }

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }
    std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RatPolynomial = Polynomial<Rational>;
using QuadPolynomial = Polynomial<QuadField>;

template <class T>
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : c_(order + 1) {}
    TruncatedSeries(const Polynomial<T>& p, int order) : c_(order + 1) {
        for (int k = 0; k <= order; ++k) c_[k] = p.coeff(k);
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const T& coeff(int k) const { return c_.at(k); }
    T& coeff(int k) { return c_.at(k); }
    const std::vector<T>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& v : c_)
            if (!(v == T(0))) return false;
        return true;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        check_order(o);
        for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
        return *this;
    }
    TruncatedSeries operator+(const TruncatedSeries& o) const {
        TruncatedSeries r = *this;
        return r += o;
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        check_order(o);
        TruncatedSeries r(order());
        for (int i = 0; i <= order(); ++i) {
            if (c_[i] == T(0)) continue;
            for (int j = 0; i + j <= order(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
        }
        return r;
    }
    TruncatedSeries scaled(const T& a) const {
        TruncatedSeries r = *this;
        for (auto& v : r.c_) v = v * a;
        return r;
    }
    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncatedSeries& o) const { return !(*this == o); }

private:
    void check_order(const TruncatedSeries& o) const {
        if (o.order() != order()) throw Error("series truncation orders differ");
    }
    std::vector<T> c_;
};

using RatSeries = TruncatedSeries<Rational>;
using QuadSeries = TruncatedSeries<QuadField>;

// Power-series quotient of two polynomials to the given order. The divisor
// must have a nonzero constant term (unit constant terms keep the quotient
// integral, which is the case of interest here).
template <class T>
TruncatedSeries<T> series_divide(const Polynomial<T>& numer, const Polynomial<T>& denom,
                                 int order) {
    if (denom.coeff(0) == T(0))
        throw Error("series division: divisor has zero constant term");
    TruncatedSeries<T> q(order);
    T inv_d0 = T(1) / denom.coeff(0);
    for (int k = 0; k <= order; ++k) {
        T acc = numer.coeff(k);
        for (int i = 1; i <= k; ++i) {
            if (denom.coeff(i) == T(0)) continue;
            acc -= denom.coeff(i) * q.coeff(k - i);
        }
        q.coeff(k) = acc * inv_d0;
    }
    return q;
}

// Spec surface: integer-polynomial quotient as an exact rational series.
RatSeries series_div_truncate(const IntPolynomial& numer, const IntPolynomial& denom, int order);

// Rational series of an integer polynomial's reciprocal, 1/p(t).
RatSeries reciprocal_series(const IntPolynomial& p, int order);

// Conversions.
RatPolynomial to_rational(const IntPolynomial& p);
// Throws unless every coefficient is an integer.
IntPolynomial to_integer_checked(const RatPolynomial& p);

// True iff coefficient k equals coefficient n_exponent - k for all k.
bool palindrome_check(const IntPolynomial& p, int n_exponent);

}  // namespace sfd
