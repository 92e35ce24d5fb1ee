#pragma once

// Pipeline orchestration: per-type caches for the enumerated group, cover,
// character tables, and fake degree tables, plus the verification report.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sfd/molien.hpp"
#include "sfd/tables.hpp"

namespace sfd {

struct FakeDegreeRow {
    std::string label;
    char type = 'M';
    long degree = 0;              // graded character degree
    long ungraded_degree_a = 0;   // the Q pair degrees (b = -1 for type M)
    long ungraded_degree_b = -1;
    IntPolynomial P;
    std::vector<Integer> H;       // series coefficients 0..N+1
    int spin_row = -1;            // row in the SpinCharacterTable, -1 in dataset mode
    bool label_equivalent = false;
};

struct FakeDegreeTable {
    CartanType type;
    int n_reflections = 0;
    std::vector<long> degrees;
    std::vector<FakeDegreeRow> rows;  // output order (reference order if matched)
    int basic_row = -1;
    // factor applied to type Q rows of classical tables: 1 or 1/2
    Rational q_factor = Rational(1);
    bool matched_reference = false;
    std::vector<std::string> notes;
};

// Assembles P and H rows from a computed spin character table, identifies
// the basic spin row, selects the classical type-Q normalization, orders
// and labels the columns (reference layout when it matches), and checks
// palindromicity plus the basic-spin closed form.
FakeDegreeTable assemble_fake_degrees(const MolienContext& mc);

// Layout finishing shared by the from-scratch and dataset paths: reference
// matching with the classical type-Q factor selection, canonical ordering
// and labels when requested, basic-row bookkeeping, closed-form check.
// `basic_pre_index` is the basic spin row position before reordering.
void apply_layout(FakeDegreeTable& table, const RootSystem& rs, int basic_pre_index,
                  bool relabel_canonical);

struct CheckResult {
    std::string name;
    bool ok = true;
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_ok() const {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

class Engine {
public:
    explicit Engine(long budget = kDefaultBudget) : budget_(budget) {}

    long budget() const { return budget_; }
    const RootSystem& root_system(CartanType t);
    Integer order(CartanType t);
    const ElementStore& store(CartanType t);
    const Classes& classes(CartanType t);
    const CoverContext& cover(CartanType t);
    const CoverClassData& cover_classes(CartanType t);
    const CycloCharTable& char_table(CartanType t);
    const SpinCharacterTable& spin_table(CartanType t);
    const FakeDegreeTable& fake_degrees(CartanType t);
    MolienContext molien_context(CartanType t);

    // From-scratch verification battery; `deep` adds the full-cover oracle.
    VerifyReport verify(CartanType t, bool deep);

private:
    struct TypeData {
        std::unique_ptr<RootSystem> rs;
        std::optional<Integer> order;
        std::unique_ptr<ElementStore> store;
        std::optional<Classes> classes;
        std::unique_ptr<CoverContext> cover;
        std::unique_ptr<CoverClassData> covcls;
        std::optional<CycloCharTable> chartab;
        std::optional<SpinCharacterTable> spintab;
        std::optional<FakeDegreeTable> fdtab;
        bool poincare_ok = false;
    };
    TypeData& data(CartanType t);

    long budget_;
    std::map<CartanType, TypeData> cache_;
};

}  // namespace sfd
