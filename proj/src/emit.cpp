#include "ssqn/emit.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace ssqn::cli {

std::string format_double(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&c)) return format_double(*d);
  return std::get<std::string>(c);
}

std::string cell_json(const Cell& c) {
  if (std::holds_alternative<std::string>(c))
    return "\"" + std::get<std::string>(c) + "\"";  // labels only, no escapes needed
  return cell_text(c);
}

}  // namespace

void write_csv(const Table& t, std::ostream& os) {
  for (size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& row : t.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << "\n";
  }
}

void write_jsonl(const Table& t, std::ostream& os) {
  for (const auto& row : t.rows) {
    os << "{";
    for (size_t i = 0; i < row.size(); ++i) {
      os << (i ? "," : "") << "\"" << t.columns[i] << "\":" << cell_json(row[i]);
    }
    os << "}\n";
  }
}

void write_table(const Table& t, std::ostream& os, const std::string& format) {
  if (format == "csv")
    write_csv(t, os);
  else if (format == "jsonl")
    write_jsonl(t, os);
  else
    throw std::invalid_argument("unknown output format: " + format);
}

}  // namespace ssqn::cli
