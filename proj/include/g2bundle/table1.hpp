#pragma once

// Reference census rows: monodromy word with the expected rank of pi_1 and
// first Betti number for the closed and once-punctured fibers.
//
// The rows live in data/table1.csv; the build embeds that file as
// g2bundle::kTable1Csv (generated header g2bundle/table1_data.hpp).

#include <array>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "g2bundle/errors.hpp"
#include "g2bundle/presentation.hpp"
#include "g2bundle/twist_word.hpp"

namespace g2bundle {

struct Table1Row {
  TwistWord word;
  std::array<int, 2> rank{};         // indexed by fiber: closed, once-punctured
  std::array<long long, 2> betti_1{};

  int expected_rank(FiberType f) const { return rank[f == FiberType::closed ? 0 : 1]; }
  long long expected_betti(FiberType f) const { return betti_1[f == FiberType::closed ? 0 : 1]; }
};

/// Parses the fixture: '#' comment lines, a header line, then
/// word,closed_rank,closed_beta1,punctured_rank,punctured_beta1.
inline std::vector<Table1Row> parse_table1(std::string_view csv) {
  std::vector<Table1Row> rows;
  std::istringstream in{std::string(csv)};
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != 5) throw InputError("table1 fixture: expected 5 fields in '" + line + "'");
    Table1Row row;
    row.word = parse_twist_word(fields[0]);
    row.rank = {std::stoi(fields[1]), std::stoi(fields[3])};
    row.betti_1 = {std::stoll(fields[2]), std::stoll(fields[4])};
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace g2bundle
