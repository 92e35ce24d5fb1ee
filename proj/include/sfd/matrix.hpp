#pragma once

// Small dense matrices over the rationals: just enough linear algebra for
// reflection representations (dimension at most 8 here, but generic).

#include <vector>

#include "sfd/polynomial.hpp"
#include "sfd/rational.hpp"

namespace sfd {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }

    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    Rational trace() const;
    // Exact determinant by fraction-free elimination.
    Rational det() const;
    // Characteristic polynomial det(tI - M), monic, via Faddeev-LeVerrier.
    RatPolynomial charpoly() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// det(I - t*M) for the rational matrix of a finite-order transformation.
// The coefficients must come out integral (they do for every element of a
// crystallographic reflection group); a non-integer coefficient aborts.
IntPolynomial charpoly_reciprocal(const RatMatrix& m);

}  // namespace sfd
