#pragma once

// RFC-4180-style CSV with a header row and 17-significant-digit doubles, so
// a re-parse reproduces every value bitwise.

#include <iosfwd>
#include <string>
#include <vector>

#include "nss/fit.hpp"
#include "nss/forcing.hpp"

namespace nss {

struct DiagnosticsTable {
    std::vector<Diagnostics> rows;
};

void emit_csv(const DiagnosticsTable& table, std::ostream& os);
void emit_csv(const ConvergenceReport& report, std::ostream& os);

std::string format_double(double v);  // shortest 17-significant-digit form
double parse_double(const std::string& s);

// Parses a diagnostics CSV (columns t,energy,roughness,slope,mass).
DiagnosticsTable parse_diagnostics_csv(std::istream& is);

// Column extraction for the fit tool.
TimeSeries column(const DiagnosticsTable& table, const std::string& name);

void write_csv_file(const DiagnosticsTable& table, const std::string& path);
void write_csv_file(const ConvergenceReport& report, const std::string& path);
DiagnosticsTable read_csv_file(const std::string& path);

}  // namespace nss
