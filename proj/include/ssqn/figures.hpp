#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ssqn/table.hpp"

namespace ssqn {

struct NamedTable {
  std::string name;  // file stem, e.g. "fig7_a"
  Table table;
};

// Deterministic datasets behind the named figure / table reproductions:
// fig2, fig4, fig5 (observer counts over theta grids), fig6, fig7
// (double-violation curves, four panels each), table1, table2.
std::vector<NamedTable> reproduce_dataset(std::string_view name);

std::vector<std::string> reproduction_names();

const std::vector<double>& table1_thetas();  // 14 rows
const std::vector<double>& table2_thetas();  // 12 rows

}  // namespace ssqn
