#pragma once

// Deterministic tabular output for the command-line front end. Cells are
// preformatted decimal strings: integers exact (never scientific
// notation), rationals as "p/q". The three emitters encode the same
// rows; timings never enter a record.

#include <string>
#include <utility>
#include <vector>

namespace scoreseq {

struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> diagnostics;

  std::string to_text() const;
  std::string to_csv() const;
  std::string to_json() const;
};

}  // namespace scoreseq
