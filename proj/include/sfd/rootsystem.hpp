#pragma once

// Crystallographic root systems for the supported Cartan types, realized
// with rational coordinates:
//   A_n  in (n+1)-space (roots e_i - e_j, norm^2 2),
//   B_n  in n-space (norms^2 1 and 2),
//   D_n  in n-space (norm^2 2),
//   G_2  in the sum-zero plane of 3-space (norms^2 2 and 6),
//   F_4  in 4-space (norms^2 1 and 2),
//   E_6, E_7, E_8 in 8-space (norm^2 2).
// Simple roots are numbered as in Bourbaki (see the README table).
//
// Every squared root length lies in {1, 2, 6}, so each normalization
// sqrt((a,a)) lives in Q(r2,r3,r5).

#include <cstdint>
#include <string>
#include <vector>

#include "sfd/matrix.hpp"
#include "sfd/rational.hpp"

namespace sfd {

struct CartanType {
    char family = 'A';  // 'A'..'G'
    int rank = 1;

    // Accepts "A1".."A7", "B2".."B4", "D4", "G2", "F4", "E6", "E7", "E8".
    static CartanType parse(const std::string& s);
    std::string str() const { return std::string(1, family) + std::to_string(rank); }
    bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
    bool operator<(const CartanType& o) const {
        return family != o.family ? family < o.family : rank < o.rank;
    }
};

class RootSystem {
public:
    explicit RootSystem(CartanType type);

    CartanType type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return ambient_; }
    // Number of positive roots (= number of reflections).
    int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
    int num_roots() const { return static_cast<int>(roots_.size()); }

    const std::vector<Rational>& root(int i) const { return roots_[i]; }
    int simple_root_index(int i) const { return simple_[i]; }
    // Squared length of root i under the standard dot product.
    const Rational& norm2(int i) const { return norm2_[i]; }

    // Action of the i-th simple reflection on the root set.
    const std::vector<int>& simple_perm(int i) const { return simple_perm_[i]; }
    // Reflection matrix of the i-th simple root on ambient space.
    const RatMatrix& simple_matrix(int i) const { return simple_mat_[i]; }
    // Coxeter matrix entry m_ij (order of s_i s_j).
    int coxeter(int i, int j) const { return coxeter_[i][j]; }

    // Fundamental invariant degrees, increasing. Validated on construction:
    // sum(d_i - 1) = N always, and prod d_i = |W| (checked in weyl-layer
    // helpers; the Poincare-series validation runs with the enumerated
    // pipeline, see molien::poincare_identity_check).
    const std::vector<long>& degrees() const { return degrees_; }

    // Standard dot product of ambient vectors.
    static Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
    // Image of v under the reflection through root index r.
    std::vector<Rational> reflect(int r, const std::vector<Rational>& v) const;
    // Index of a root given by coordinates; -1 if absent.
    int root_index(const std::vector<Rational>& v) const;

private:
    void build();

    CartanType type_;
    int ambient_ = 0;
    std::vector<std::vector<Rational>> roots_;
    std::vector<Rational> norm2_;
    std::vector<int> simple_;
    std::vector<std::vector<int>> simple_perm_;
    std::vector<RatMatrix> simple_mat_;
    std::vector<std::vector<int>> coxeter_;
    std::vector<long> degrees_;
};

// Invariant degrees by type (table data; validation happens in RootSystem
// construction and the Poincare oracle).
std::vector<long> degree_table(CartanType t);

}  // namespace sfd
