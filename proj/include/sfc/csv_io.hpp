#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfc/baselines.hpp"
#include "sfc/scheduler.hpp"

namespace sfc {

/// Shortest decimal text that reads back to the same double.
std::string format_number(double value);
/// Fixed-point with the given number of decimals, for report columns.
std::string format_fixed(double value, int decimals);
/// Strict full-string parse; throws ValidationError.
double parse_number(const std::string& text);

/// Reads a `slot,value` file. Slots must be exactly 1..N (any order).
/// Negative values are rejected unless allow_negative is set.
std::vector<double> load_series_csv(
    const std::filesystem::path& path,
    std::optional<std::size_t> expected_length = std::nullopt,
    bool allow_negative = false);

/// One numeric column of a headered CSV, in row order.
std::vector<double> load_csv_column(const std::filesystem::path& path,
                                    const std::string& column);

void write_series_csv(std::span<const double> values, std::ostream& out);

/// slot, case, generation_kwh, sfc_demand_kwh, household_demand_kwh, e_bs,
/// e_sb, e_gs, e_sg, e_su, soc_after, a_after, j_buy, j_user, j_grid, j_sd,
/// j_v, j_total -- full precision.
void write_trace_csv(const DayTrace& trace, std::ostream& out);
void write_trace_csv(const DayTrace& trace, const std::filesystem::path& path);

/// Totals, averages and percent savings of each scheme against each
/// baseline, rounded to 2 decimals.
void write_summary(const DayTrace& proposed,
                   std::span<const BaselineTrace> baselines, std::ostream& out);
void write_summary(const DayTrace& proposed,
                   std::span<const BaselineTrace> baselines,
                   const std::filesystem::path& path);

}  // namespace sfc
