#include "report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace coincidence::cli {

Format parse_format(const std::string& name) {
  if (name == "table") return Format::table;
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + name);
}

std::string format_cell(const Cell& cell, int digits) {
  struct Visitor {
    int digits;
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(const Rational& v) const { return to_decimal(v, digits); }
    std::string operator()(double v) const {
      return to_decimal(from_double(v), digits);
    }
    std::string operator()(Verbatim v) const {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.10g", v.value);
      return buf;
    }
  };
  return std::visit(Visitor{digits}, cell);
}

namespace {

nlohmann::json json_cell(const Cell& cell, int digits) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return *i;
  if (const auto* v = std::get_if<Verbatim>(&cell)) return std::stod(format_cell(*v, digits));
  return std::stod(format_cell(cell, digits));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_table(const Report& r, int digits, std::ostream& out) {
  out << r.command << "  n=" << r.params.n << " d=" << r.params.d;
  for (const auto& [key, value] : r.meta) {
    out << "  " << key << "=" << format_cell(value, digits);
  }
  out << "\n";
  for (const Section& sec : r.sections) {
    out << "\n" << sec.title << "\n";
    std::vector<std::vector<std::string>> text;
    std::vector<std::size_t> width;
    for (const auto& c : sec.columns) width.push_back(c.size());
    for (const auto& row : sec.rows) {
      auto& line = text.emplace_back();
      for (std::size_t i = 0; i < row.size(); ++i) {
        line.push_back(format_cell(row[i], digits));
        if (i < width.size()) width[i] = std::max(width[i], line.back().size());
      }
    }
    auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << "  " << cells[i]
            << std::string(width[i] - cells[i].size(), ' ');
      }
      out << "\n";
    };
    emit(sec.columns);
    for (const auto& line : text) emit(line);
  }
  if (!r.notes.empty()) {
    out << "\ndiscrepancies\n";
    for (const Annotation& a : r.notes) {
      out << "  " << a.quantity << "  paper: " << format_cell(a.paper, digits)
          << "  computed: " << format_cell(a.computed, digits) << "\n";
    }
  }
}

void render_json(const Report& r, int digits, std::ostream& out) {
  nlohmann::json doc;
  doc["command"] = r.command;
  doc["params"] = {{"n", r.params.n}, {"d", r.params.d}};
  doc["format"] = "json";
  doc["digits"] = digits;
  nlohmann::json meta = nlohmann::json::object();
  for (const auto& [key, value] : r.meta) meta[key] = json_cell(value, digits);
  doc["meta"] = meta;
  doc["sections"] = nlohmann::json::array();
  for (const Section& sec : r.sections) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : sec.rows) {
      nlohmann::json obj = nlohmann::json::object();
      for (std::size_t i = 0; i < row.size() && i < sec.columns.size(); ++i) {
        obj[sec.columns[i]] = json_cell(row[i], digits);
      }
      rows.push_back(std::move(obj));
    }
    doc["sections"].push_back({{"title", sec.title}, {"rows", std::move(rows)}});
  }
  doc["annotations"] = nlohmann::json::array();
  for (const Annotation& a : r.notes) {
    doc["annotations"].push_back({{"quantity", a.quantity},
                                  {"paper", json_cell(a.paper, digits)},
                                  {"computed", json_cell(a.computed, digits)}});
  }
  out << doc.dump(2) << "\n";
}

void render_csv(const Report& r, int digits, std::ostream& out) {
  bool first = true;
  for (const Section& sec : r.sections) {
    if (!first) out << "\n";
    first = false;
    for (std::size_t i = 0; i < sec.columns.size(); ++i) {
      out << (i ? "," : "") << csv_field(sec.columns[i]);
    }
    out << "\n";
    for (const auto& row : sec.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out << (i ? "," : "") << csv_field(format_cell(row[i], digits));
      }
      out << "\n";
    }
  }
}

}  // namespace

void render(const Report& report, Format format, int digits, std::ostream& out) {
  switch (format) {
    case Format::table: render_table(report, digits, out); break;
    case Format::json: render_json(report, digits, out); break;
    case Format::csv: render_csv(report, digits, out); break;
  }
}

}  // namespace coincidence::cli
