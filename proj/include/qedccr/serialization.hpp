#pragma once

// Tabular output (CSV / JSON) shared by all commands.
//
// Numbers are written with 17 significant digits so that every double
// survives a write/read cycle bit-exactly. NaN is written as "nan" in CSV and
// as null in JSON.

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qedccr/scattering.hpp"

namespace qedccr {

inline constexpr char kVersion[] = "1.0.0";

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json meta = nlohmann::json::object();
};

enum class OutputFormat { Csv, Json };
OutputFormat parse_format(std::string_view name);

std::string format_number(double v);

void write_csv(std::ostream& out, Table const& table);
//! {"meta": {...}, "rows": [{column: value, ...}, ...]}
void write_json(std::ostream& out, Table const& table);
void write_table(std::ostream& out, Table const& table, OutputFormat fmt);

inline std::vector<std::string> const kScanColumns = {
    "theta", "C2", "PA2", "PB2", "VA2", "VB2", "raw_norm", "residual_A", "residual_B", "status"};

nlohmann::json coefficients_json(TwoQubitState const& s);
Table scan_table(ScanResult const& scan);

//! Inverse of write_json(scan_table(scan)).
//! \throws Error on malformed input.
ScanResult read_scan_json(std::istream& in);

}  // namespace qedccr
