#include "sfd/polynomial.hpp"

namespace sfd {

RatSeries series_div_truncate(const IntPolynomial& numer, const IntPolynomial& denom, int order) {
    return series_divide(to_rational(numer), to_rational(denom), order);
}

RatSeries reciprocal_series(const IntPolynomial& p, int order) {
    return series_div_truncate(IntPolynomial::one(), p, order);
}

RatPolynomial to_rational(const IntPolynomial& p) {
    std::vector<Rational> v(p.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = Rational(p.coeffs()[i]);
    return RatPolynomial(std::move(v));
}

IntPolynomial to_integer_checked(const RatPolynomial& p) {
    std::vector<Integer> v(p.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = to_integer(p.coeffs()[i]);
    return IntPolynomial(std::move(v));
}

bool palindrome_check(const IntPolynomial& p, int n_exponent) {
    if (p.degree() > n_exponent) return false;
    for (int k = 0; k <= n_exponent; ++k)
        if (p.coeff(k) != p.coeff(n_exponent - k)) return false;
    return true;
}

}  // namespace sfd
