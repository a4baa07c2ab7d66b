#include "qedccr/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "qedccr/errors.hpp"

namespace qedccr {

using nlohmann::json;

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("unknown output format '" + std::string(name) + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

json cell_json(Cell const& c) {
  if (auto const* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return nullptr;
    return *d;
  }
  return std::get<std::string>(c);
}

double number_or_nan(json const& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

}  // namespace

void write_csv(std::ostream& out, Table const& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "," : "") << csv_field(table.columns[i]);
  }
  out << '\n';
  for (auto const& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      if (auto const* d = std::get_if<double>(&row[i])) {
        out << format_number(*d);
      } else {
        out << csv_field(std::get<std::string>(row[i]));
      }
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, Table const& table) {
  json doc;
  doc["meta"] = table.meta;
  doc["meta"]["version"] = kVersion;
  json rows = json::array();
  for (auto const& row : table.rows) {
    json r = json::object();
    for (std::size_t i = 0; i < row.size() && i < table.columns.size(); ++i) {
      r[table.columns[i]] = cell_json(row[i]);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_table(std::ostream& out, Table const& table, OutputFormat fmt) {
  if (fmt == OutputFormat::Csv) {
    write_csv(out, table);
  } else {
    write_json(out, table);
  }
}

json coefficients_json(TwoQubitState const& s) {
  json arr = json::array();
  for (auto const& z : s.coefficients()) arr.push_back({z.real(), z.imag()});
  return arr;
}

Table scan_table(ScanResult const& scan) {
  Table t;
  t.columns = kScanColumns;
  t.meta["command"] = "ccr";
  t.meta["process"] = std::string(to_string(scan.process));
  t.meta["mu"] = scan.mu;
  t.meta["lambda"] = scan.lambda;
  t.meta["initial"] = coefficients_json(scan.initial);
  for (auto const& r : scan.rows) {
    t.rows.push_back({r.theta, r.c2, r.pa2, r.pb2, r.va2, r.vb2, r.raw_norm, r.residual_a,
                      r.residual_b, std::string(to_string(r.status))});
  }
  return t;
}

ScanResult read_scan_json(std::istream& in) {
  try {
    json const doc = json::parse(in);
    auto const& meta = doc.at("meta");
    ScanResult scan;
    scan.process = parse_process(meta.at("process").get<std::string>());
    scan.mu = meta.at("mu").get<double>();
    scan.lambda = meta.at("lambda").get<double>();
    Coefficients c{};
    auto const& init = meta.at("initial");
    if (init.size() != 4) throw Error("initial state must have four coefficients");
    for (std::size_t i = 0; i < 4; ++i) {
      c[i] = {init[i].at(0).get<double>(), init[i].at(1).get<double>()};
    }
    scan.initial = TwoQubitState::exact(c);
    for (auto const& r : doc.at("rows")) {
      ScanRow row;
      row.theta = number_or_nan(r.at("theta"));
      row.c2 = number_or_nan(r.at("C2"));
      row.pa2 = number_or_nan(r.at("PA2"));
      row.pb2 = number_or_nan(r.at("PB2"));
      row.va2 = number_or_nan(r.at("VA2"));
      row.vb2 = number_or_nan(r.at("VB2"));
      row.raw_norm = number_or_nan(r.at("raw_norm"));
      row.residual_a = number_or_nan(r.at("residual_A"));
      row.residual_b = number_or_nan(r.at("residual_B"));
      auto const status = r.at("status").get<std::string>();
      if (status == "ok") {
        row.status = RowStatus::Ok;
      } else if (status == "domain_error") {
        row.status = RowStatus::DomainError;
      } else if (status == "degenerate") {
        row.status = RowStatus::Degenerate;
      } else {
        throw Error("unknown row status '" + status + "'");
      }
      scan.rows.push_back(row);
    }
    return scan;
  } catch (json::exception const& e) {
    throw Error(std::string("malformed scan document: ") + e.what());
  }
}

}  // namespace qedccr
