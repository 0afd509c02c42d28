#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace ssqn {

// Row-oriented result container handed to the CLI writers. Cells are either
// integers, doubles, or short strings (labels, sentinels).
using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::vector<Cell>& add_row() { return rows.emplace_back(); }
};

}  // namespace ssqn
