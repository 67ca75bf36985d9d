#include "sfc/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <numbers>
#include <sstream>

#include "sfc/csv_io.hpp"
#include "sfc/errors.hpp"
#include "sfc/random.hpp"

namespace sfc {

namespace {

constexpr std::uint32_t kSfcDemandStream = 1;
constexpr std::uint32_t kHouseholdStream = 2;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream ss(s);
  while (std::getline(ss, part, sep)) parts.push_back(trim(part));
  return parts;
}

int parse_int(const std::string& text) {
  const std::string s = trim(text);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("not an integer: '" + text + "'");
  }
  return value;
}

std::uint64_t parse_u64(const std::string& text) {
  const std::string s = trim(text);
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ValidationError("not an unsigned integer: '" + text + "'");
  }
  return value;
}

double parse_clock(const std::string& text) {
  const auto parts = split(text, ':');
  if (parts.size() == 1) return parse_number(parts[0]);
  if (parts.size() != 2) throw ValidationError("bad time '" + text + "'");
  const int h = parse_int(parts[0]);
  const int m = parse_int(parts[1]);
  if (h < 0 || h > 24 || m < 0 || m >= 60) {
    throw ValidationError("bad time '" + text + "'");
  }
  return h + m / 60.0;
}

std::string format_clock(double hours) {
  const long minutes = std::lround(hours * 60.0);
  const long m = minutes % 60;
  return std::to_string(minutes / 60) + ":" + (m < 10 ? "0" : "") +
         std::to_string(m);
}

std::vector<TimeWindow> parse_windows(const std::string& text) {
  std::vector<TimeWindow> windows;
  for (const auto& item : split(text, ',')) {
    if (item.empty()) continue;
    const auto ends = split(item, '-');
    if (ends.size() != 2) throw ValidationError("bad window '" + item + "'");
    windows.push_back({parse_clock(ends[0]), parse_clock(ends[1])});
  }
  return windows;
}

template <typename T, typename Parse>
std::pair<T, T> parse_pair(const std::string& text, Parse parse) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) {
    throw ValidationError("expected 'low,high', got '" + text + "'");
  }
  return {parse(parts[0]), parse(parts[1])};
}

std::optional<std::string> parse_path(const std::string& text) {
  if (text.empty() || text == "none") return std::nullopt;
  return text;
}

std::filesystem::path resolve(const ScenarioSpec& spec, const std::string& p) {
  const std::filesystem::path path(p);
  return path.is_absolute() || spec.base_dir.empty() ? path
                                                     : spec.base_dir / path;
}

using Setter = std::function<void(ScenarioSpec&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"slot_count", [](ScenarioSpec& s, const std::string& v) { s.slot_count = parse_int(v); }},
      {"slot_duration", [](ScenarioSpec& s, const std::string& v) { s.clock.slot_duration = parse_number(v); }},
      {"start_hour", [](ScenarioSpec& s, const std::string& v) { s.clock.start_hour = parse_clock(v); }},
      {"panel_count", [](ScenarioSpec& s, const std::string& v) { s.panel_count = parse_int(v); }},
      {"panel_area", [](ScenarioSpec& s, const std::string& v) { s.panel_area = parse_number(v); }},
      {"panel_efficiency", [](ScenarioSpec& s, const std::string& v) { s.panel_efficiency = parse_number(v); }},
      {"esd_capacity", [](ScenarioSpec& s, const std::string& v) { s.esd_capacity = parse_number(v); }},
      {"esd_floor", [](ScenarioSpec& s, const std::string& v) {
         s.esd_floor = v == "auto" ? std::nullopt : std::optional(parse_number(v));
       }},
      {"esd_efficiency", [](ScenarioSpec& s, const std::string& v) { s.esd_efficiency = parse_number(v); }},
      {"esd_rate_limit", [](ScenarioSpec& s, const std::string& v) { s.esd_rate_limit = parse_number(v); }},
      {"cycle_cost", [](ScenarioSpec& s, const std::string& v) {
         s.cycle_cost = v == "auto" ? std::nullopt : std::optional(parse_number(v));
       }},
      {"a_initial", [](ScenarioSpec& s, const std::string& v) { s.a_initial = parse_number(v); }},
      {"vc_step", [](ScenarioSpec& s, const std::string& v) { s.vc_step = parse_number(v); }},
      {"a_floor", [](ScenarioSpec& s, const std::string& v) { s.a_floor = parse_number(v); }},
      {"initial_soc", [](ScenarioSpec& s, const std::string& v) { s.initial_soc = parse_number(v); }},
      {"seed", [](ScenarioSpec& s, const std::string& v) { s.seed = parse_u64(v); }},
      {"irradiance_peak", [](ScenarioSpec& s, const std::string& v) { s.irradiance.peak = parse_number(v); }},
      {"irradiance_peak_slot", [](ScenarioSpec& s, const std::string& v) { s.irradiance.peak_slot = parse_number(v); }},
      {"irradiance_half_width", [](ScenarioSpec& s, const std::string& v) { s.irradiance.half_width = parse_number(v); }},
      {"irradiance_csv", [](ScenarioSpec& s, const std::string& v) { s.irradiance_csv = parse_path(v); }},
      {"grid_price_csv", [](ScenarioSpec& s, const std::string& v) { s.grid_price_csv = parse_path(v); }},
      {"sell_factor", [](ScenarioSpec& s, const std::string& v) { s.sell_factor = parse_number(v); }},
      {"buy_factor", [](ScenarioSpec& s, const std::string& v) { s.buy_factor = parse_number(v); }},
      {"peak_windows", [](ScenarioSpec& s, const std::string& v) { s.demand.peak_windows = parse_windows(v); }},
      {"peak_trips", [](ScenarioSpec& s, const std::string& v) {
         std::tie(s.demand.peak_trips_min, s.demand.peak_trips_max) = parse_pair<int>(v, parse_int);
       }},
      {"offpeak_trips", [](ScenarioSpec& s, const std::string& v) {
         std::tie(s.demand.offpeak_trips_min, s.demand.offpeak_trips_max) = parse_pair<int>(v, parse_int);
       }},
      {"energy_per_trip", [](ScenarioSpec& s, const std::string& v) { s.demand.energy_per_trip = parse_number(v); }},
      {"household_range", [](ScenarioSpec& s, const std::string& v) {
         std::tie(s.demand.household_min, s.demand.household_max) = parse_pair<double>(v, parse_number);
       }},
      {"household_scale", [](ScenarioSpec& s, const std::string& v) { s.demand.household_scale = parse_number(v); }},
      {"sfc_demand_csv", [](ScenarioSpec& s, const std::string& v) { s.sfc_demand_csv = parse_path(v); }},
      {"household_demand_csv", [](ScenarioSpec& s, const std::string& v) { s.household_demand_csv = parse_path(v); }},
  };
  return table;
}

}  // namespace

void DemandProfileSpec::validate() const {
  if (peak_trips_min < 0 || peak_trips_max < peak_trips_min) {
    throw ValidationError("peak trip range must be nonempty and nonnegative");
  }
  if (offpeak_trips_min < 0 || offpeak_trips_max < offpeak_trips_min) {
    throw ValidationError("off-peak trip range must be nonempty and nonnegative");
  }
  if (!(energy_per_trip >= 0.0)) {
    throw ValidationError("energy per trip must be nonnegative");
  }
  if (!(household_min >= 0.0) || !(household_max >= household_min)) {
    throw ValidationError("household range must be nonempty and nonnegative");
  }
  if (!(household_scale > 0.0)) {
    throw ValidationError("household scale must be positive");
  }
  for (const auto& w : peak_windows) {
    if (!(w.end_hour > w.start_hour)) {
      throw ValidationError("peak window must end after it starts");
    }
  }
}

bool DemandProfileSpec::is_peak(double hour) const noexcept {
  for (const auto& w : peak_windows) {
    if (w.contains(hour)) return true;
  }
  return false;
}

std::vector<double> synthetic_irradiance(const BellIrradiance& bell,
                                         int slot_count) {
  if (!(bell.peak >= 0.0) || !(bell.half_width > 0.0)) {
    throw ValidationError("irradiance bell needs peak >= 0 and width > 0");
  }
  std::vector<double> values(static_cast<std::size_t>(std::max(slot_count, 0)));
  for (int t = 1; t <= slot_count; ++t) {
    const double x = (t - bell.peak_slot) / bell.half_width;
    if (std::abs(x) < 1.0) {
      const double c = std::cos(std::numbers::pi / 2.0 * x);
      values[t - 1] = bell.peak * c * c;
    }
  }
  return values;
}

std::vector<double> synthetic_grid_price(const SlotClock& clock,
                                         int slot_count) {
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::max(slot_count, 0)));
  auto bump = [](double h, double centre, double width) {
    const double z = (h - centre) / width;
    return std::exp(-z * z);
  };
  for (int t = 1; t <= slot_count; ++t) {
    const double h = clock.slot_midpoint(t);
    values.push_back(30.0 + 12.0 * bump(h, 8.0, 1.5) + 28.0 * bump(h, 18.5, 1.5));
  }
  return values;
}

std::vector<double> gen_sfc_demand(const DemandProfileSpec& spec,
                                   const SlotClock& clock, int slot_count,
                                   std::uint64_t seed) {
  spec.validate();
  Rng rng(seed, kSfcDemandStream);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::max(slot_count, 0)));
  for (int t = 1; t <= slot_count; ++t) {
    const bool peak = spec.is_peak(clock.slot_start(t));
    const auto trips =
        peak ? rng.uniform_int(spec.peak_trips_min, spec.peak_trips_max)
             : rng.uniform_int(spec.offpeak_trips_min, spec.offpeak_trips_max);
    values.push_back(static_cast<double>(trips) * spec.energy_per_trip);
  }
  return values;
}

std::vector<double> gen_household_demand(const DemandProfileSpec& spec,
                                         int slot_count, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed, kHouseholdStream);
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(std::max(slot_count, 0)));
  for (int t = 1; t <= slot_count; ++t) {
    const double base = spec.household_min +
                        rng.uniform(0.0, 1.0) *
                            (spec.household_max - spec.household_min);
    values.push_back(base * spec.household_scale);
  }
  return values;
}

std::vector<PriceTriple> derive_prices(std::span<const double> grid_sell,
                                       double sell_factor, double buy_factor) {
  if (!(0.0 < buy_factor && buy_factor < sell_factor && sell_factor < 1.0)) {
    throw ValidationError("price factors must satisfy 0 < buy < sell < 1");
  }
  std::vector<PriceTriple> prices;
  prices.reserve(grid_sell.size());
  for (double p : grid_sell) {
    if (!(p > 0.0)) throw ValidationError("grid price must be positive");
    prices.emplace_back(p, sell_factor * p, buy_factor * p);
  }
  return prices;
}

ScenarioSpec parse_scenario_spec(std::istream& in,
                                 const std::filesystem::path& base_dir) {
  ScenarioSpec spec;
  spec.base_dir = base_dir;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": unknown key '" + key + "'");
    }
    try {
      it->second(spec, value);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + " (" + key +
                            "): " + e.what());
    }
  }
  return spec;
}

ScenarioSpec load_scenario_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  return parse_scenario_spec(in, path.parent_path());
}

std::string to_config_text(const ScenarioSpec& s) {
  std::ostringstream out;
  auto opt_num = [](const std::optional<double>& v) {
    return v ? format_number(*v) : std::string("auto");
  };
  auto opt_path = [](const std::optional<std::string>& v) {
    return v ? *v : std::string("none");
  };
  std::string windows;
  for (const auto& w : s.demand.peak_windows) {
    if (!windows.empty()) windows += ",";
    windows += format_clock(w.start_hour) + "-" + format_clock(w.end_hour);
  }
  out << "slot_count = " << s.slot_count << '\n'
      << "slot_duration = " << format_number(s.clock.slot_duration) << '\n'
      << "start_hour = " << format_clock(s.clock.start_hour) << '\n'
      << "panel_count = " << s.panel_count << '\n'
      << "panel_area = " << format_number(s.panel_area) << '\n'
      << "panel_efficiency = " << format_number(s.panel_efficiency) << '\n'
      << "esd_capacity = " << format_number(s.esd_capacity) << '\n'
      << "esd_floor = " << opt_num(s.esd_floor) << '\n'
      << "esd_efficiency = " << format_number(s.esd_efficiency) << '\n'
      << "esd_rate_limit = " << format_number(s.esd_rate_limit) << '\n'
      << "cycle_cost = " << opt_num(s.cycle_cost) << '\n'
      << "a_initial = " << format_number(s.a_initial) << '\n'
      << "vc_step = " << format_number(s.vc_step) << '\n'
      << "a_floor = " << format_number(s.a_floor) << '\n'
      << "initial_soc = " << format_number(s.initial_soc) << '\n'
      << "seed = " << s.seed << '\n'
      << "irradiance_peak = " << format_number(s.irradiance.peak) << '\n'
      << "irradiance_peak_slot = " << format_number(s.irradiance.peak_slot) << '\n'
      << "irradiance_half_width = " << format_number(s.irradiance.half_width) << '\n'
      << "irradiance_csv = " << opt_path(s.irradiance_csv) << '\n'
      << "grid_price_csv = " << opt_path(s.grid_price_csv) << '\n'
      << "sell_factor = " << format_number(s.sell_factor) << '\n'
      << "buy_factor = " << format_number(s.buy_factor) << '\n'
      << "peak_windows = " << windows << '\n'
      << "peak_trips = " << s.demand.peak_trips_min << ','
      << s.demand.peak_trips_max << '\n'
      << "offpeak_trips = " << s.demand.offpeak_trips_min << ','
      << s.demand.offpeak_trips_max << '\n'
      << "energy_per_trip = " << format_number(s.demand.energy_per_trip) << '\n'
      << "household_range = " << format_number(s.demand.household_min) << ','
      << format_number(s.demand.household_max) << '\n'
      << "household_scale = " << format_number(s.demand.household_scale) << '\n'
      << "sfc_demand_csv = " << opt_path(s.sfc_demand_csv) << '\n'
      << "household_demand_csv = " << opt_path(s.household_demand_csv) << '\n';
  return out.str();
}

ScenarioConfig build_scenario(const ScenarioSpec& spec) {
  if (spec.slot_count < 3) {
    throw ValidationError("scenario needs at least 3 slots");
  }
  const int n = spec.slot_count;
  const auto len = static_cast<std::size_t>(n);
  spec.demand.validate();

  const std::vector<double> irradiance =
      spec.irradiance_csv
          ? load_series_csv(resolve(spec, *spec.irradiance_csv), len)
          : synthetic_irradiance(spec.irradiance, n);
  const std::vector<double> grid_price =
      spec.grid_price_csv
          ? load_series_csv(resolve(spec, *spec.grid_price_csv), len)
          : synthetic_grid_price(spec.clock, n);
  const std::vector<PriceTriple> prices =
      derive_prices(grid_price, spec.sell_factor, spec.buy_factor);
  const std::vector<double> sfc_demand =
      spec.sfc_demand_csv
          ? load_series_csv(resolve(spec, *spec.sfc_demand_csv), len)
          : gen_sfc_demand(spec.demand, spec.clock, n, spec.seed);
  std::vector<double> household;
  if (spec.household_demand_csv) {
    household = load_series_csv(resolve(spec, *spec.household_demand_csv), len);
    for (double& v : household) v *= spec.demand.household_scale;
  } else {
    household = gen_household_demand(spec.demand, n, spec.seed);
  }

  const double floor = spec.esd_floor.value_or(0.05 * spec.esd_capacity);
  const double alpha = spec.cycle_cost ? *spec.cycle_cost : default_cycle_cost(prices);

  std::vector<SlotInput> inputs;
  inputs.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    inputs.push_back(SlotInput{static_cast<int>(i) + 1, irradiance[i],
                               sfc_demand[i], household[i], prices[i]});
  }

  ScenarioConfig config{
      n,
      spec.clock.slot_duration,
      SolarArrayParams(spec.panel_count, spec.panel_area, spec.panel_efficiency),
      EsdParams(spec.esd_capacity, floor, spec.esd_efficiency,
                spec.esd_rate_limit, alpha),
      VcParams(spec.a_initial, spec.vc_step, spec.a_floor),
      spec.initial_soc,
      std::move(inputs),
      spec.seed,
  };
  validate_scenario(config);
  return config;
}

}  // namespace sfc
