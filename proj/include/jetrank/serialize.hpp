#pragma once

#include <string>

#include "jetrank/geometry.hpp"
#include "jetrank/verifier.hpp"

namespace jetrank {

/// Versioned JSON document for a Configuration; round-trips exactly.
std::string configuration_to_json(const Configuration& c, const PrimeModulus& p);
Configuration configuration_from_json(const std::string& text, PrimeModulus* p_out = nullptr);

std::string sweep_report_json(const SweepResult& r);
std::string sweep_report_csv(const SweepResult& r);

/// Write via a temp file plus rename so interrupted runs never leave a
/// truncated report.
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace jetrank
