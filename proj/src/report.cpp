#include "flagdom/report.hpp"

#include <algorithm>
#include <sstream>

namespace flagdom {

namespace {

bool is_scalar(const Report& v) { return !v.is_array() && !v.is_object(); }

bool is_flat(const Report& v) {
  if (is_scalar(v)) return true;
  return v.is_array() && std::all_of(v.begin(), v.end(), is_scalar);
}

std::string scalar_text(const Report& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

std::string flat_text(const Report& v, const char* sep) {
  if (is_scalar(v)) return scalar_text(v);
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += scalar_text(v[i]);
  }
  return out;
}

bool is_table(const Report& v) {
  return std::all_of(v.begin(), v.end(), [](const Report& row) {
    return row.is_object() &&
           std::all_of(row.begin(), row.end(), [](const Report& c) { return is_flat(c); });
  });
}

void emit_object(const Report& node, int indent, std::ostringstream& out);

void emit_table(const Report& rows, int indent, std::ostringstream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [k, v] : row.items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) {
        columns.push_back(k);
      }
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      const auto it = row.find(columns[i]);
      line.push_back(it == row.end() ? "" : flat_text(*it, ","));
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto print_line = [&](const std::vector<std::string>& line) {
    out << std::string(indent, ' ');
    for (std::size_t i = 0; i < line.size(); ++i) {
      out << line[i];
      if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
    }
    out << "\n";
  };
  print_line(columns);
  for (const auto& line : cells) print_line(line);
}

void emit_value(const std::string& key, const Report& v, int indent,
                std::ostringstream& out) {
  const std::string pad(indent, ' ');
  const bool text_list = v.is_array() && !v.empty() &&
                         std::all_of(v.begin(), v.end(),
                                     [](const Report& e) { return e.is_string(); });
  if (text_list) {
    out << pad << key << ":\n";
    for (const auto& e : v) out << pad << "  - " << e.get<std::string>() << "\n";
  } else if (is_flat(v)) {
    const std::string text = flat_text(v, " ");
    out << pad << key << ":" << (text.empty() ? "" : " " + text) << "\n";
  } else if (v.is_object()) {
    out << pad << key << ":\n";
    emit_object(v, indent + 2, out);
  } else if (std::all_of(v.begin(), v.end(), [](const Report& e) {
               return e.is_array() && is_flat(e);
             })) {
    out << pad << key << ":\n";
    for (const auto& row : v) out << pad << "  (" << flat_text(row, ",") << ")\n";
  } else if (is_table(v)) {
    out << pad << key << ":\n";
    emit_table(v, indent + 2, out);
  } else {
    out << pad << key << ":\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        std::ostringstream block;
        emit_object(e, indent + 4, block);
        std::string text = block.str();
        text.replace(indent + 2, 2, "- ");
        out << text;
      } else {
        emit_value("-", e, indent + 2, out);
      }
    }
  }
}

void emit_object(const Report& node, int indent, std::ostringstream& out) {
  for (const auto& [k, v] : node.items()) emit_value(k, v, indent, out);
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream out;
  if (report.is_object()) {
    emit_object(report, 0, out);
  } else {
    emit_value("value", report, 0, out);
  }
  return out.str();
}

}  // namespace flagdom
