#include "scoreseq/output.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace scoreseq {

namespace {

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string OutputRecord::to_text() const {
  std::ostringstream os;
  os << "# command: " << command << "\n";
  for (const auto& [key, value] : parameters) os << "# " << key << ": " << value << "\n";

  std::vector<std::size_t> width(columns.size(), 0);
  for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size() && c < width.size(); ++c)
      width[c] = std::max(width[c], row[c].size());

  auto emit_row = [&](const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - cells[c].size(), ' ') + cells[c];
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << "\n";
  };
  emit_row(columns);
  for (const auto& row : rows) emit_row(row);
  for (const auto& d : diagnostics) os << "# " << d << "\n";
  return os.str();
}

std::string OutputRecord::to_csv() const {
  std::ostringstream os;
  os << "# command: " << command << "\n";
  for (const auto& [key, value] : parameters) os << "# " << key << ": " << value << "\n";
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (c) os << ",";
    os << csv_escape(columns[c]);
  }
  os << "\n";
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      os << csv_escape(row[c]);
    }
    os << "\n";
  }
  for (const auto& d : diagnostics) os << "# " << d << "\n";
  return os.str();
}

std::string OutputRecord::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : parameters) params[key] = value;
  j["parameters"] = params;
  j["columns"] = columns;
  j["rows"] = rows;
  j["diagnostics"] = diagnostics;
  return j.dump(2) + "\n";
}

}  // namespace scoreseq
