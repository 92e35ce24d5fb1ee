#pragma once

// Published reference data: the half-tables of spin fake degrees for the
// supported types (coefficients of P for degrees 0..N/2, lower half; the
// rest follows by palindromicity). The engine computes every value from
// scratch; these pin the expected column labels and order, and back the
// verification suites.

#include <algorithm>
#include <string>
#include <vector>

#include "sfd/rootsystem.hpp"

namespace sfd {

struct GoldenTable {
    CartanType type;
    int n_reflections;
    std::vector<std::string> labels;
    // half_columns[col][degree], degree = 0..N/2
    std::vector<std::vector<long>> half_columns;

    // Full column reconstructed by palindromicity (degrees 0..N).
    std::vector<long> full_column(int col) const {
        const auto& half = half_columns[col];
        std::vector<long> full(n_reflections + 1);
        for (int k = 0; k <= n_reflections; ++k) {
            int kk = std::min(k, n_reflections - k);
            full[k] = half[kk];
        }
        return full;
    }
};

// The reference table for a type, or nullptr when none is bundled.
const GoldenTable* golden_table(CartanType t);

}  // namespace sfd
