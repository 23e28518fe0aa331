#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "fht/analysis.hpp"

namespace fht {

// 12 significant digits via std::to_chars, so the rendering is
// correctly rounded, locale-free and byte-stable across runs.
std::string format_significant(double value, int digits = 12);

// CSV emission for the analysis series. Header + one row per record;
// normalization fields are left empty where undefined (n = 1).
void write_complexity_header(std::ostream& out);
void write_complexity_row(std::ostream& out, const ComplexityRecord& rec);
void write_complexity_csv(std::ostream& out, std::span<const ComplexityRecord> records);

void write_error_header(std::ostream& out);
void write_error_row(std::ostream& out, const ErrorRecord& rec);
void write_error_csv(std::ostream& out, std::span<const ErrorRecord> records);

} // namespace fht
