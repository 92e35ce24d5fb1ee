#pragma once

// The spin Molien formula and its oracles.
//
// For a graded spin character chi the multiplicity series is
//
//   H(chi, t) = sum over even split classes <x> of
//               chi(x~) tr_B(x~) / ( |C_x| det(1 - t x) )
//
// with one fixed lift x~ per class (the product chi(x~) tr_B(x~) does not
// depend on the choice), and the spin fake degree is
// P(chi, t) = H(chi, t) * prod_i (1 - t^{d_i}).
//
// The per-class sum is accumulated with QuadField coefficients and gated to
// the rationals coefficient-by-coefficient at the end; integrality and
// non-negativity are enforced afterwards.

#include <string>
#include <vector>

#include "sfd/spinchar.hpp"

namespace sfd {

// One even-split-class contribution to the Molien sum.
struct MolienTerm {
    QuadField chi;            // chi(x~)
    QuadField trace;          // tr_B(x~)
    long centralizer = 0;     // |C_x| = |W| / class size
    IntPolynomial det1mtx;    // det(1 - t x) on V
};

// Class-formula sum to the given truncation order; coefficients must come
// out as non-negative integers.
TruncatedSeries<Integer> molien_series(const std::vector<MolienTerm>& terms, int order);

// P from an H series: multiply by prod (1 - t^{d_i}), check degree <= N,
// integrality, non-negativity and vanishing of the order-(N+1) coefficient.
IntPolynomial fake_degree_from_series(const TruncatedSeries<Integer>& h,
                                      const std::vector<long>& degrees, int n_reflections);

// prod_i (1 - t^{d_i}).
IntPolynomial degree_product(const std::vector<long>& degrees);

// m * prod_i (1 + t^{d_i - 1}) with m = 1 for even rank, 2 for odd rank.
IntPolynomial basic_spin_closed_form(const RootSystem& rs);

// (1/|W|) sum_w 1/det(1-tw) = prod_i 1/(1-t^{d_i}) up to the given order.
bool poincare_identity_check(const Classes& classes, long group_order,
                             const std::vector<long>& degrees, int order);

// Per-character spin Molien machinery on the computed pipeline.
struct MolienContext {
    const RootSystem* rs;
    const Classes* classes;
    const CoverClassData* cov;
    const SpinCharacterTable* table;
    long group_order;

    std::vector<MolienTerm> terms_for_row(int row) const;
    int truncation_order() const { return rs->num_positive() + 1; }
};

TruncatedSeries<Integer> spin_molien_H(const MolienContext& mc, int row, int order);

// The QuadField character value a Molien term may use: the real part when
// the value is real; zero when it is complex against a vanishing trace
// (anything else aborts).
QuadField real_chi_for_molien(const Cyclotomic& chi, const QuadField& trace);
IntPolynomial spin_fake_degree(const MolienContext& mc, int row);

// Brute-force oracle: the average of chi(x~) tr_B(x~) / det(1 - t x) over
// all 2|W| cover elements, with each element contributing its own lift
// trace and characteristic polynomial (recomputed along the BFS tree).
// Returns one series per graded row. This must equal spin_molien_H exactly.
std::vector<TruncatedSeries<Integer>> full_cover_oracle_H(const MolienContext& mc, int order);

}  // namespace sfd
