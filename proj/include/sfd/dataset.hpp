#pragma once

// Line-oriented dataset files for externally supplied class data and spin
// character tables (E7/E8 without from-scratch enumeration), plus exporters
// so every enumerable type round-trips.
//
// Class dataset grammar (one record per line, '#' comments):
//   weyl_type <TYPE>
//   order <INT>
//   class name=<ID> size=<INT> word=<i1,i2,...> parity=<even|odd>
//         split=<yes|no> [carter=<LABEL>]
// Words are 1-based generator letters; the identity has an empty word.
//
// Spin table grammar:
//   weyl_type <TYPE>
//   classes <name:parity> <name:parity> ...
//   char label=<ID> type=<M|Q> values=<lit>;<lit>;...
// with one field literal per listed class (graded rows: zero on every odd
// split class).

#include <string>
#include <vector>

#include "sfd/engine.hpp"

namespace sfd {

struct ClassRecord {
    std::string name;
    long size = 0;
    std::vector<int> word;  // 0-based letters
    int parity = 1;
    bool split = false;
    std::string carter;     // optional

    // derived on load
    IntPolynomial charpoly;
    long order = 0;
};

struct ClassDataset {
    CartanType type;
    Integer group_order;
    std::vector<ClassRecord> entries;

    const ClassRecord* find(const std::string& name) const;
};

struct SpinTableRow {
    std::string label;
    char type = 'M';
    std::vector<Cyclotomic> values;  // one per listed class
};

struct SpinTableDataset {
    CartanType type;
    std::vector<std::string> class_names;  // split classes, file order
    std::vector<int> class_parity;         // +1 even, -1 odd
    std::vector<SpinTableRow> rows;
};

// Number of nodes of a Carter admissible-diagram label like "D4(a1)",
// "2A3+A1", "A4+A1"; "e" (or "0") denotes the empty diagram.
int carter_node_count(const std::string& label);

ClassDataset load_class_dataset(const std::string& path, const RootSystem& rs);
ClassDataset parse_class_dataset(const std::string& text, const RootSystem& rs);
SpinTableDataset load_spin_table(const std::string& path);
SpinTableDataset parse_spin_table(const std::string& text);

struct ValidationReport {
    std::vector<std::string> findings;
    bool ok() const { return findings.empty(); }
    std::string str() const;
};

// Orthogonality, odd-split vanishing, and count-recipe checks; all findings
// are reported, none throw.
ValidationReport validate_spin_table(const SpinTableDataset& ds, const ClassDataset& cds);

// Full fake degree table from validated datasets; basic spin traces and
// det(1 - t x) are recomputed from the class words.
FakeDegreeTable fake_degrees_from_dataset(const SpinTableDataset& ds, const ClassDataset& cds,
                                          const RootSystem& rs);

// Exporters (round-trip inverses of the loaders above).
std::string export_class_dataset(const Classes& classes, const ElementStore& store);
std::string export_spin_table(const SpinCharacterTable& st, const Classes& classes,
                              const FakeDegreeTable& fd);

}  // namespace sfd
