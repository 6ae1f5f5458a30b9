#pragma once

#include <string>

#include "graphweight/verify.hpp"

namespace graphweight {

enum class OutputFormat { plain, csv, jsonl };

struct FormatOptions {
  OutputFormat format = OutputFormat::plain;
  /// Adds per-formula wall times. Off by default so that identical runs
  /// produce byte-identical output.
  bool timings = false;
};

/// Column names for the formula values, in output order.
inline constexpr std::array<const char*, 3> kValueFields{"phi_definition", "phi_eulerian", "psi"};

/// csv header line (no newline):
///   graph6,n,m,phi_definition,phi_eulerian,psi,equal,claim_checked,parity_checked,identity_violations
/// followed, with timings, by elapsed_ms_definition,elapsed_ms_eulerian,elapsed_ms_corank.
std::string csv_header(const FormatOptions& opts);

/// One record without a trailing newline. Skipped or unselected formulas are
/// empty in csv, null in jsonl and "skipped"/"-" in plain.
std::string format_report(const VerificationReport& r, const FormatOptions& opts);

/// Human-readable one-line summary, e.g. "1024 graphs, 0 mismatches".
std::string format_summary(const RunSummary& s);

}  // namespace graphweight
