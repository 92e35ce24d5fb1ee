#pragma once

// Character tables of the double cover from scratch, and the graded spin
// character table extracted from them.
//
// The ungraded table is computed with the Dixon-Schneider method: common
// eigenvectors of the class-algebra matrices over a prime field F_p with
// p = 1 (mod exponent), lifted to exact cyclotomic values through the power
// maps. Spin characters are the rows with chi(z) = -chi(1); they are
// classified into types M and Q by vanishing on the odd split classes, and
// type Q pairs are summed into graded characters.

#include <string>
#include <vector>

#include "sfd/cover.hpp"
#include "sfd/cyclotomic.hpp"

namespace sfd {

struct CycloCharTable {
    // rows[t][k] = value of the t-th irreducible on cover class k
    std::vector<std::vector<Cyclotomic>> rows;
    std::vector<long> degrees;
    uint64_t dixon_prime = 0;
};

// Complete ungraded character table of the cover; throws if any internal
// consistency check fails (count, degrees, orthogonality).
CycloCharTable character_table(const CoverClassData& cov);

// Indices of rows with chi(z) = -chi(1).
std::vector<int> extract_spin(const CycloCharTable& table, const CoverClassData& cov);

struct GradedRow {
    std::string label;       // assigned at table-assembly time
    char type = 'M';         // 'M' or 'Q'
    long degree = 0;         // graded character degree (sum of the pair for Q)
    int ungraded_a = -1;     // row index in the ungraded table
    int ungraded_b = -1;     // partner for type Q, -1 for type M
    long degree_a = 0;       // ungraded degrees of the pair
    long degree_b = -1;
    // values on even split classes then odd split classes (the latter are
    // zero for every graded simple character; kept for dataset symmetry).
    // Exact cyclotomics: D4 carries honest imaginary values on one even
    // split class (where the basic spin trace vanishes).
    std::vector<Cyclotomic> values;
};

struct SpinCharacterTable {
    // W-class indices in canonical class order
    std::vector<int> even_split;
    std::vector<int> odd_split;
    // cover-class index of the canonical lift (rep, +) per split class,
    // aligned with even_split followed by odd_split
    std::vector<int> canonical_cover_class;
    std::vector<GradedRow> rows;

    int num_split() const { return static_cast<int>(even_split.size() + odd_split.size()); }
    const Cyclotomic& value(int row, int split_idx) const { return rows[row].values[split_idx]; }
};

// Classification and pairing of the spin rows into the graded table.
// Requires splitness already computed on `classes`.
SpinCharacterTable classify_and_pair(const CycloCharTable& table, const CoverClassData& cov,
                                     const Classes& classes);

// Index of the row whose values equal the basic spin traces on every even
// split class; throws unless it is unique.
int identify_basic_spin(const SpinCharacterTable& table, const CoverClassData& cov,
                        const Classes& classes);

}  // namespace sfd
