#pragma once

// Flat-record serialization of spectra, coefficient reports and remainder
// profiles. CSV files carry one header line; JSON uses the report field names
// as keys. Floating values are written so that reading them back reproduces
// the in-memory value (shortest round-trip doubles; BigFloat at its own
// precision).

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "kohn/asymptotics.hpp"
#include "kohn/spectrum.hpp"

namespace kohn::io {

std::string format_double(double v);
double parse_double(const std::string& text);

// --- spectrum: eigenvalue,multiplicity,cumulative --------------------------

void write_spectrum_csv(std::ostream& os, std::span<const SpectrumEntry> table);
std::vector<SpectrumEntry> read_spectrum_csv(std::istream& is);
nlohmann::json spectrum_to_json(std::span<const SpectrumEntry> table);
std::vector<SpectrumEntry> spectrum_from_json(const nlohmann::json& j);

// --- coefficient reports ----------------------------------------------------

nlohmann::json to_json(const CoefficientReport& report);
CoefficientReport coefficient_report_from_json(const nlohmann::json& j);

/// n,convention,method,exact,value,error_bound,K
void write_coefficient_csv(std::ostream& os, std::span<const CoefficientReport> reports);
std::vector<CoefficientReport> read_coefficient_csv(std::istream& is);

/// Field-by-field equality, comparing `value` through its decimal form.
bool same_report(const CoefficientReport& a, const CoefficientReport& b);

// --- remainder profile: lambda,count,residual,normalized -------------------

void write_remainder_csv(std::ostream& os, const RemainderProfile& profile);
/// fitted_C is recomputed from the rows (max |normalized| over the upper half).
RemainderProfile read_remainder_csv(std::istream& is, PrecisionSpec prec = {});
nlohmann::json to_json(const RemainderProfile& profile);

}  // namespace kohn::io
