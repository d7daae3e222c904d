#pragma once

// Tabular command output rendered as an aligned text table, JSON, or CSV.

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coincidence/exact.hpp"

namespace coincidence::cli {

enum class Format { table, json, csv };

Format parse_format(const std::string& name);

/// A published number, printed as given rather than at the report precision.
struct Verbatim {
  double value;
};

/// Strings, integers and verbatim numbers print as they are; rationals and
/// doubles print with the requested number of significant digits.
using Cell = std::variant<std::string, std::int64_t, Rational, double, Verbatim>;

struct Section {
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// A computed value shown next to the published one it disagrees with.
struct Annotation {
  std::string quantity;
  Cell paper;
  Cell computed;
};

struct Report {
  std::string command;
  Params params;
  std::vector<std::pair<std::string, Cell>> meta;
  std::vector<Section> sections;
  std::vector<Annotation> notes;
};

std::string format_cell(const Cell& cell, int digits);

void render(const Report& report, Format format, int digits, std::ostream& out);

}  // namespace coincidence::cli
