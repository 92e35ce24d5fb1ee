#pragma once

// Clifford algebra of the ambient euclidean space: orthonormal generators
// e_1..e_m with e_i^2 = +1 and e_i e_j = -e_j e_i. Basis monomials e_S are
// indexed by bitmasks with factors in ascending index order.
//
// Two representations are used: a general sparse element with QuadField
// coefficients (the public face, fine for words), and a packed "lift" with
// rational coefficients plus folded normalization prefactors (1/r2)^a
// (1/r6)^b with a, b in {0,1}, used by the cover breadth-first sweeps where
// millions of products are taken. Both agree through to_element().

#include <map>
#include <vector>

#include "sfd/quadfield.hpp"
#include "sfd/rootsystem.hpp"

namespace sfd {

// Sign of e_S * e_T as +-1 (metric +1, ascending basis order).
int clifford_basis_sign(uint32_t s, uint32_t t);

class CliffordElement {
public:
    explicit CliffordElement(int dim = 0) : dim_(dim) {}
    static CliffordElement scalar(int dim, const QuadField& v);
    // Vector with the given ambient coordinates.
    static CliffordElement from_vector(int dim, const std::vector<QuadField>& coords);
    static CliffordElement basis_term(int dim, uint32_t mask, const QuadField& v);

    int dim() const { return dim_; }
    const std::map<uint32_t, QuadField>& terms() const { return c_; }
    QuadField coeff(uint32_t mask) const;
    QuadField scalar_part() const { return coeff(0); }
    bool is_zero() const { return c_.empty(); }
    // -1 odd, +1 even, 0 mixed.
    int homogeneity() const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator-() const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement scaled(const QuadField& v) const;
    // Reversion (transpose anti-automorphism).
    CliffordElement reversed() const;
    bool operator==(const CliffordElement& o) const { return dim_ == o.dim_ && c_ == o.c_; }

private:
    void add(uint32_t mask, const QuadField& v);
    int dim_;
    std::map<uint32_t, QuadField> c_;
};

// Clifford product of unit simple-root vectors t_{i1}...t_{ik}; the empty
// word gives the scalar 1. Letters are 0-based generator indices.
CliffordElement lift_word(const RootSystem& rs, const std::vector<int>& letters);

// Packed lift: rational coefficient array of size 2^m times the folded
// prefactor (1/r2)^sq2 (1/r6)^sq6, sq2 and sq6 in {0,1}.
struct PackedLift {
    std::vector<Rational> c;
    uint8_t sq2 = 0, sq6 = 0;

    static PackedLift one(int dim);
    bool engaged() const { return !c.empty(); }
    void clear() { c.clear(); c.shrink_to_fit(); }
    QuadField value(uint32_t mask) const;
    QuadField scalar_value() const { return value(0); }
};

// Multiply a packed lift on the right by the (unnormalized) root vector of
// the i-th simple root, folding the normalization 1/sqrt((a,a)).
PackedLift lift_mul_simple(const RootSystem& rs, const PackedLift& x, int i);

// Whether two packed lifts of the same group element agree or differ by a
// global sign: returns 0 for equal, 1 for negated; throws otherwise.
int lift_compare_sign(const PackedLift& a, const PackedLift& b);

CliffordElement to_element(const RootSystem& rs, const PackedLift& x);

// Basic spin trace of a lift: 2^(n/2) (n even) or 2^((n+1)/2) (n odd,
// summing both spinor halves) times the scalar coefficient, n = rank.
QuadField basic_spin_trace_of(const RootSystem& rs, const CliffordElement& lift);

}  // namespace sfd
