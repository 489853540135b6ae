#include "nss/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "nss/errors.hpp"

namespace nss {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str()) throw ParseError("not a number: '" + s + "'", 0);
    return v;
}

void emit_csv(const DiagnosticsTable& table, std::ostream& os) {
    os << "t,energy,roughness,slope,mass\n";
    for (const Diagnostics& d : table.rows)
        os << format_double(d.t) << ',' << format_double(d.energy) << ','
           << format_double(d.roughness) << ',' << format_double(d.slope) << ','
           << format_double(d.mass) << '\n';
}

void emit_csv(const ConvergenceReport& report, std::ostream& os) {
    os << "tau,error,order\n";
    for (size_t i = 0; i < report.rows.size(); ++i) {
        os << format_double(report.rows[i].tau) << ',' << format_double(report.rows[i].error)
           << ',';
        if (i == 0)
            os << "";  // no pairwise order for the coarsest step
        else
            os << format_double(report.pair_orders[i - 1]);
        os << '\n';
    }
}

DiagnosticsTable parse_diagnostics_csv(std::istream& is) {
    DiagnosticsTable table;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) continue;
        if (line_no == 1) {
            if (line != "t,energy,roughness,slope,mass")
                throw ParseError("unexpected CSV header '" + line + "'", line_no);
            continue;
        }
        std::stringstream ss(line);
        std::string cell;
        std::vector<double> vals;
        while (std::getline(ss, cell, ',')) vals.push_back(parse_double(cell));
        if (vals.size() != 5) throw ParseError("expected 5 columns", line_no);
        table.rows.push_back({vals[0], vals[1], vals[2], vals[3], vals[4]});
    }
    return table;
}

TimeSeries column(const DiagnosticsTable& table, const std::string& name) {
    TimeSeries s;
    s.name = name;
    for (const Diagnostics& d : table.rows) {
        double v;
        if (name == "energy")
            v = d.energy;
        else if (name == "roughness")
            v = d.roughness;
        else if (name == "slope")
            v = d.slope;
        else if (name == "mass")
            v = d.mass;
        else
            throw ValidationError("unknown column '" + name + "'", "column");
        s.push(d.t, v);
    }
    return s;
}

namespace {
std::ofstream open_for_write(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open '" + path + "' for writing");
    return os;
}
}  // namespace

void write_csv_file(const DiagnosticsTable& table, const std::string& path) {
    auto os = open_for_write(path);
    emit_csv(table, os);
    if (!os) throw IoError("write failed for '" + path + "'");
}

void write_csv_file(const ConvergenceReport& report, const std::string& path) {
    auto os = open_for_write(path);
    emit_csv(report, os);
    if (!os) throw IoError("write failed for '" + path + "'");
}

DiagnosticsTable read_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open '" + path + "'");
    return parse_diagnostics_csv(is);
}

}  // namespace nss
