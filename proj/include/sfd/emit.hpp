#pragma once

// Deterministic textual emission of fake degree tables and reports.

#include <string>

#include "sfd/engine.hpp"

namespace sfd {

enum class OutputFormat { md, csv, json };

OutputFormat parse_format(const std::string& s);

// Fake degree table: one row per degree (0..N/2 with `half`, else 0..N),
// one column per character. csv: header row of labels, coefficient rows.
// md: degree column plus character columns. json: object with type, N,
// degrees, labels, types, and per-character coefficient arrays.
std::string emit_table(const FakeDegreeTable& table, OutputFormat fmt, bool half);

// Graded multiplicity series H (coefficients 0..N+1 per character).
std::string emit_molien(const FakeDegreeTable& table, OutputFormat fmt);

// Graded spin character table (labels x split classes, field literals).
std::string emit_chartable(const SpinCharacterTable& st, const Classes& classes,
                           const FakeDegreeTable& fd, OutputFormat fmt);

std::string polynomial_str(const IntPolynomial& p);

}  // namespace sfd
