#pragma once

#include <filesystem>
#include <string>

#include "qcb/concurrence.hpp"
#include "qcb/states.hpp"

namespace qcb {

// State interchange document, format_version 1:
// { "format_version": 1, "dim_a": m, "dim_b": n,
//   "real_part": [[...], ...], "imag_part": [[...], ...] }
// Real and imaginary parts are separate (mn)x(mn) matrices of decimal
// numbers; the serializer emits shortest round-trip representations, so a
// save/load cycle reproduces the state bit-exactly.
inline constexpr int kStateFormatVersion = 1;

// Parses and validates; throws parse_error for malformed documents and
// validation_error (naming the violated invariant) for well-formed
// documents holding an invalid state.
BipartiteState load_state(const std::filesystem::path& path);

void save_state(const BipartiteState& rho, const std::filesystem::path& path);

enum class ReportFormat { text, csv_row, structured };

// text: labeled fields, 6 significant digits, trailing newline.
// csv_row: one unterminated row in the csv_report_header() column order.
// structured: JSON mirroring the report record, full precision.
std::string write_report(const EntanglementReport& report, ReportFormat format);

// label,dim_a,dim_b,ppt_norm,realignment_norm,negativity,ccnr_violation,
// concurrence_lower_bound,bound_source,entangled
std::string csv_report_header();

std::string to_string(BoundSource source);

}  // namespace qcb
