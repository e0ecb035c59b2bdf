#pragma once

#include "hankelkit/bound_report.hpp"
#include "hankelkit/functionals.hpp"
#include "hankelkit/rational.hpp"

#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hktool {

// Exact coefficient listing for one equality witness, plus the functional
// values it realizes.
struct CoeffTable {
    std::string label;
    bool normalized = true;
    std::vector<hankelkit::Rational> coeffs;  // a_1 .. a_order
    std::vector<std::pair<hankelkit::Functional, hankelkit::Rational>> functional_values;  // signed, exact
};

// One class's ceiling audit: the constituents, the exact recomputation, and
// the value as published.
struct AuditRow {
    hankelkit::FunctionClass class_tag = hankelkit::FunctionClass::BoundedTurning;
    hankelkit::TriangleInputs inputs;
    hankelkit::Rational recomputed;
    hankelkit::PrintedRational printed;
    bool match = false;
};

using ResultItem = std::variant<hankelkit::BoundReport, CoeffTable, AuditRow>;

struct OutputRecord {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::vector<ResultItem> results;
    std::vector<std::string> notes;
};

enum class OutputFormat { Table, Json, Csv };

OutputFormat parse_format(const std::string& s);  // throws std::invalid_argument

// Renders to a string ending in '\n'. All three are deterministic for a
// given record; JSON field order is fixed.
std::string render(const OutputRecord& rec, OutputFormat fmt);

// Fixed-precision, locale-independent float spelling used by table/CSV.
std::string format_double(double v);

}  // namespace hktool
