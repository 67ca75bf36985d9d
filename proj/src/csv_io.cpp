#include "sfc/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include "sfc/errors.hpp"

namespace sfc {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_row(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  return in;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<int> line_numbers;
};

Table read_table(const std::filesystem::path& path) {
  auto in = open_for_read(path);
  Table t;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_row(line);
    if (t.header.empty()) {
      t.header = std::move(cells);
      continue;
    }
    if (cells.size() != t.header.size()) {
      throw ValidationError(path.string() + ":" + std::to_string(line_no) +
                            ": expected " + std::to_string(t.header.size()) +
                            " fields");
    }
    t.rows.push_back(std::move(cells));
    t.line_numbers.push_back(line_no);
  }
  if (t.header.empty()) throw ValidationError(path.string() + ": empty file");
  return t;
}

std::size_t column_index(const Table& t, const std::string& name,
                         const std::filesystem::path& path) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return i;
  }
  throw ValidationError(path.string() + ": no column '" + name + "'");
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) throw InvariantViolation("number formatting failed");
  return std::string(buf, end);
}

std::string format_fixed(double value, int decimals) {
  // Avoid printing "-0.00".
  const double scale = std::pow(10.0, decimals);
  if (std::round(value * scale) == 0.0) value = 0.0;
  char buf[128];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, decimals);
  if (ec != std::errc{}) throw InvariantViolation("number formatting failed");
  return std::string(buf, end);
}

double parse_number(const std::string& text) {
  const std::string s = trim(text);
  double value = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    throw ValidationError("not a number: '" + text + "'");
  }
  return value;
}

std::vector<double> load_series_csv(const std::filesystem::path& path,
                                    std::optional<std::size_t> expected_length,
                                    bool allow_negative) {
  const Table t = read_table(path);
  if (t.header != std::vector<std::string>{"slot", "value"}) {
    throw ValidationError(path.string() + ": header must be 'slot,value'");
  }
  std::map<long, double> by_slot;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const std::string where =
        path.string() + ":" + std::to_string(t.line_numbers[r]) + ": ";
    double slot_value = 0.0;
    double value = 0.0;
    try {
      slot_value = parse_number(t.rows[r][0]);
      value = parse_number(t.rows[r][1]);
    } catch (const ValidationError& e) {
      throw ValidationError(where + e.what());
    }
    const long slot = std::lround(slot_value);
    if (static_cast<double>(slot) != slot_value || slot < 1) {
      throw ValidationError(where + "slot must be a positive integer");
    }
    if (!allow_negative && value < 0.0) {
      throw ValidationError(where + "negative value");
    }
    if (!by_slot.emplace(slot, value).second) {
      throw ValidationError(where + "duplicate slot " + std::to_string(slot));
    }
  }
  std::vector<double> values;
  values.reserve(by_slot.size());
  long expected_slot = 1;
  for (const auto& [slot, value] : by_slot) {
    if (slot != expected_slot) {
      throw ValidationError(path.string() + ": missing slot " +
                            std::to_string(expected_slot));
    }
    values.push_back(value);
    ++expected_slot;
  }
  if (expected_length && values.size() != *expected_length) {
    throw ValidationError(path.string() + ": expected " +
                          std::to_string(*expected_length) + " slots, found " +
                          std::to_string(values.size()));
  }
  return values;
}

std::vector<double> load_csv_column(const std::filesystem::path& path,
                                    const std::string& column) {
  const Table t = read_table(path);
  const std::size_t idx = column_index(t, column, path);
  std::vector<double> values;
  values.reserve(t.rows.size());
  for (const auto& row : t.rows) values.push_back(parse_number(row[idx]));
  return values;
}

void write_series_csv(std::span<const double> values, std::ostream& out) {
  out << "slot,value\n";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << (i + 1) << ',' << format_number(values[i]) << '\n';
  }
}

void write_trace_csv(const DayTrace& trace, std::ostream& out) {
  out << "slot,case,generation_kwh,sfc_demand_kwh,household_demand_kwh,"
         "e_bs,e_sb,e_gs,e_sg,e_su,soc_after,a_after,"
         "j_buy,j_user,j_grid,j_sd,j_v,j_total\n";
  for (const auto& r : trace.records) {
    const auto& d = r.decision;
    const auto& c = r.cost;
    out << r.input.index << ',' << to_string(c.label);
    for (double v :
         {r.generation, r.input.sfc_demand, r.input.household_demand,
          d.discharge, d.charge, d.buy_grid, d.sell_grid, d.sell_users,
          r.soc_after, r.a_after, c.buy, c.sell_users, c.sell_grid,
          c.storage_cycle, c.virtual_cost, c.total}) {
      out << ',' << format_number(v);
    }
    out << '\n';
  }
}

void write_trace_csv(const DayTrace& trace, const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_trace_csv(trace, out);
}

void write_summary(const DayTrace& proposed,
                   std::span<const BaselineTrace> baselines,
                   std::ostream& out) {
  auto savings = [](double base, double cost) -> std::string {
    if (base == 0.0) return "undefined";
    return format_fixed(percent_savings(base, cost), 2);
  };
  out << "scheme,total_cost_cents,average_cost_cents";
  for (const auto& b : baselines) {
    out << ",savings_vs_" << to_string(b.kind) << "_pct";
  }
  out << '\n';

  auto row = [&](std::string_view name, double total, double average) {
    out << name << ',' << format_fixed(total, 2) << ','
        << format_fixed(average, 2);
    for (const auto& b : baselines) out << ',' << savings(b.total_cost, total);
    out << '\n';
  };
  row("proposed", proposed.total_cost, proposed.average_cost);
  for (const auto& b : baselines) {
    row(to_string(b.kind), b.total_cost, b.average_cost);
  }
}

void write_summary(const DayTrace& proposed,
                   std::span<const BaselineTrace> baselines,
                   const std::filesystem::path& path) {
  auto out = open_for_write(path);
  write_summary(proposed, baselines, out);
}

}  // namespace sfc
