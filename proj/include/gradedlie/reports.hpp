#pragma once
// Deterministic rendering of tabular reports. TEXT aligns columns for
// reading, CSV emits a header row plus data rows with LF endings, JSON emits
// a schema versioned object with fixed key order. Identical inputs produce
// byte identical output in every format.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gradedlie/errors.hpp"

namespace gradedlie {

struct ReportTable {
  std::string command;
  std::string title;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> notes;
};

enum class OutputFormat { kText, kJson, kCsv };

inline OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw DomainError("unknown output format '" + name + "'");
}

namespace detail {

inline void check_table(const ReportTable& table) {
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size())
      throw DomainError("report row width does not match the column count");
}

inline std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string json_string(const std::string& value) {
  std::string out = "\"";
  for (char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          static const char* hex = "0123456789abcdef";
          out += "\\u00";
          out += hex[(c >> 4) & 0xf];
          out += hex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

inline bool json_integer(const std::string& value) {
  if (value.empty()) return false;
  const std::size_t start = value[0] == '-' ? 1 : 0;
  if (start == value.size()) return false;
  if (value[start] == '0' && value.size() > start + 1) return false;
  for (std::size_t i = start; i < value.size(); ++i)
    if (value[i] < '0' || value[i] > '9') return false;
  return true;
}

inline std::string json_value(const std::string& value) {
  return json_integer(value) ? value : json_string(value);
}

}  // namespace detail

inline std::string render_text(const ReportTable& table) {
  detail::check_table(table);
  std::string out = table.title + "\n";
  if (!table.columns.empty()) {
    std::vector<std::size_t> width(table.columns.size());
    for (std::size_t j = 0; j < table.columns.size(); ++j) width[j] = table.columns[j].size();
    for (const auto& row : table.rows)
      for (std::size_t j = 0; j < row.size(); ++j)
        if (row[j].size() > width[j]) width[j] = row[j].size();
    const auto emit = [&](const std::vector<std::string>& cells) {
      out += "\n";
      for (std::size_t j = 0; j < cells.size(); ++j) {
        if (j) out += "  ";
        out += cells[j];
        if (j + 1 < cells.size()) out.append(width[j] - cells[j].size(), ' ');
      }
    };
    emit(table.columns);
    for (const auto& row : table.rows) emit(row);
    out += "\n";
  }
  for (const auto& [key, value] : table.notes) out += "\n" + key + ": " + value;
  if (!table.notes.empty()) out += "\n";
  return out;
}

inline std::string render_csv(const ReportTable& table) {
  detail::check_table(table);
  std::string out;
  const auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t j = 0; j < cells.size(); ++j) {
      if (j) out += ",";
      out += detail::csv_cell(cells[j]);
    }
    out += "\n";
  };
  emit(table.columns);
  for (const auto& row : table.rows) emit(row);
  return out;
}

inline std::string render_json(const ReportTable& table) {
  detail::check_table(table);
  std::string out = "{\n  \"schema\": 1,\n  \"command\": " + detail::json_string(table.command) +
                    ",\n  \"title\": " + detail::json_string(table.title) + ",\n  \"columns\": [";
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    if (j) out += ", ";
    out += detail::json_string(table.columns[j]);
  }
  out += "],\n  \"rows\": [";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    out += i ? ",\n    [" : "\n    [";
    for (std::size_t j = 0; j < table.rows[i].size(); ++j) {
      if (j) out += ", ";
      out += detail::json_value(table.rows[i][j]);
    }
    out += "]";
  }
  out += table.rows.empty() ? "],\n" : "\n  ],\n";
  out += "  \"notes\": {";
  for (std::size_t i = 0; i < table.notes.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += detail::json_string(table.notes[i].first) + ": " +
           detail::json_string(table.notes[i].second);
  }
  out += table.notes.empty() ? "}\n}\n" : "\n  }\n}\n";
  return out;
}

inline std::string render(const ReportTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kText: return render_text(table);
    case OutputFormat::kJson: return render_json(table);
    case OutputFormat::kCsv: return render_csv(table);
  }
  throw DomainError("unknown output format");
}

}  // namespace gradedlie
