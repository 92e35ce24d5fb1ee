#include "sfd/matrix.hpp"

namespace sfd {

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j) == 0) continue;
                r.at(i, j) += v * o.at(k, j);
            }
        }
    return r;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix sum shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix difference shape mismatch");
    RatMatrix r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw Error("matrix apply shape mismatch");
    std::vector<Rational> r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) r[i] += at(i, j) * v[j];
    return r;
}

Rational RatMatrix::trace() const {
    if (rows_ != cols_) throw Error("trace of a non-square matrix");
    Rational t;
    for (int i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

Rational RatMatrix::det() const {
    if (rows_ != cols_) throw Error("determinant of a non-square matrix");
    RatMatrix m = *this;
    Rational d = 1;
    int n = rows_;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (m.at(r, col) != 0) { pivot = r; break; }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col) == 0) continue;
            Rational f = m.at(r, col) * inv;
            for (int j = col; j < n; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

RatPolynomial RatMatrix::charpoly() const {
    if (rows_ != cols_) throw Error("characteristic polynomial of a non-square matrix");
    int n = rows_;
    // Faddeev-LeVerrier: M_1 = M, c_k = -tr(M M_{k-1} ...)/k, exact over Q.
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RatMatrix mk = RatMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = *this * mk;
        Rational ck = -mk.trace() / k;
        c[n - k] = ck;
        for (int i = 0; i < n; ++i) mk.at(i, i) += ck;
    }
    return RatPolynomial(std::move(c));
}

IntPolynomial charpoly_reciprocal(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw Error("charpoly_reciprocal: matrix is not square");
    int n = m.rows();
    RatPolynomial cp = m.charpoly();
    // det(I - tM) = t^n charpoly(1/t): coefficient of t^k is the t^{n-k}
    // coefficient of det(tI - M).
    std::vector<Rational> v(n + 1);
    for (int k = 0; k <= n; ++k) v[k] = cp.coeff(n - k);
    IntPolynomial out;
    try {
        out = to_integer_checked(RatPolynomial(std::move(v)));
    } catch (const Error&) {
        throw Error("charpoly_reciprocal: non-integer coefficients, matrix is not crystallographic");
    }
    if (out.coeff(0) != 1)
        throw Error("charpoly_reciprocal: constant term is not 1");
    return out;
}

}  // namespace sfd
