#pragma once

#include <iosfwd>
#include <string>

#include "ssqn/table.hpp"

namespace ssqn::cli {

// 12 significant digits, shortest-form.
std::string format_double(double v);

// Header row plus one line per row; deterministic bytes for a given table.
void write_csv(const Table& t, std::ostream& os);

// One JSON object per row, keys in column order.
void write_jsonl(const Table& t, std::ostream& os);

void write_table(const Table& t, std::ostream& os, const std::string& format);

}  // namespace ssqn::cli
