#include "wsnsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <locale>
#include <fstream>
#include <map>
#include <sstream>

#include "wsnsim/csv_io.hpp"

namespace wsnsim {
namespace {

constexpr std::string_view kKeys[] = {
    "side_length", "node_count",   "bs_x",       "bs_y",   "cluster_fraction", "energy_mode",
    "initial_energy", "e_elec",    "e_da",       "eps_fs", "eps_mp",           "payload_bits",
    "beta",        "population",   "max_generations", "beta0", "gamma",        "alpha",
    "attractiveness_exponent", "eta", "omega",   "leach_p", "seeds",           "output_dir"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Entry {
  std::string value;
  std::size_t line = 0;
};

class Entries {
 public:
  explicit Entries(std::map<std::string, Entry, std::less<>> entries) : entries_(std::move(entries)) {}

  double number(std::string_view key, double fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    double value = 0.0;
    const char* begin = e->value.data();
    const char* end = begin + e->value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) fail(*e, key, "expected a number");
    return value;
  }

  std::size_t count(std::string_view key, std::size_t fallback) const {
    const Entry* e = find(key);
    if (!e) return fallback;
    std::size_t value = 0;
    const char* begin = e->value.data();
    const char* end = begin + e->value.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) fail(*e, key, "expected a non-negative integer");
    return value;
  }

  std::string text(std::string_view key, std::string fallback) const {
    const Entry* e = find(key);
    return e ? e->value : fallback;
  }

  [[noreturn]] static void fail(const Entry& e, std::string_view key, std::string_view why) {
    throw ConfigError("line " + std::to_string(e.line) + ": " + std::string(key) + ": " + std::string(why) +
                      " (got '" + e.value + "')");
  }

  const Entry* find(std::string_view key) const {
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, Entry, std::less<>> entries_;
};

std::string format_seeds(const std::vector<std::uint64_t>& seeds) {
  std::string out;
  for (std::size_t i = 0; i < seeds.size();) {
    std::size_t j = i;
    while (j + 1 < seeds.size() && seeds[j + 1] == seeds[j] + 1) ++j;
    if (!out.empty()) out += ',';
    out += std::to_string(seeds[i]);
    if (j > i) out += '-' + std::to_string(seeds[j]);
    i = j + 1;
  }
  return out;
}

template <typename Fn>
void check(Fn&& fn) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  check([&] { setup.field.validate(); });
  check([&] { setup.radio.validate(); });
  check([&] { setup.weights.validate(); });
  check([&] { setup.firefly.validate(); });
  check([&] { setup.jumper.validate(); });
  check([&] { LeachState{setup.leach_p}; });
  if (seeds.empty()) throw ConfigError("invalid config: seeds must not be empty");
  if (output_dir.empty()) throw ConfigError("invalid config: output_dir must not be empty");
}

std::vector<std::uint64_t> parse_seed_list(std::string_view text) {
  auto parse_one = [](std::string_view s) {
    s = trim(s);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
      throw ConfigError("invalid seed '" + std::string(s) + "'");
    return value;
  };
  std::vector<std::uint64_t> seeds;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      seeds.push_back(parse_one(item));
      continue;
    }
    const std::uint64_t lo = parse_one(item.substr(0, dash));
    const std::uint64_t hi = parse_one(item.substr(dash + 1));
    if (hi < lo) throw ConfigError("invalid seed range '" + std::string(trim(item)) + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
  }
  if (seeds.empty()) throw ConfigError("empty seed list");
  return seeds;
}

ExperimentConfig parse_config(std::string_view text) {
  std::map<std::string, Entry, std::less<>> raw;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (!raw.emplace(key, Entry{value, line_no}).second)
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  const Entries entries(std::move(raw));

  ExperimentConfig config;
  FieldConfig& field = config.setup.field;
  field.side_length = entries.number("side_length", field.side_length);
  field.node_count = entries.count("node_count", field.node_count);
  field.base_station.x = entries.number("bs_x", field.side_length / 2.0);
  field.base_station.y = entries.number("bs_y", field.side_length / 2.0);
  field.cluster_fraction = entries.number("cluster_fraction", field.cluster_fraction);
  field.initial_energy = entries.number("initial_energy", field.initial_energy);
  const std::string mode = entries.text("energy_mode", "homogeneous");
  if (mode == "homogeneous")
    field.energy_mode = EnergyMode::homogeneous;
  else if (mode == "heterogeneous")
    field.energy_mode = EnergyMode::heterogeneous;
  else
    Entries::fail(*entries.find("energy_mode"), "energy_mode", "expected homogeneous or heterogeneous");

  RadioParams& radio = config.setup.radio;
  radio.e_elec = entries.number("e_elec", radio.e_elec);
  radio.e_da = entries.number("e_da", radio.e_da);
  radio.eps_fs = entries.number("eps_fs", radio.eps_fs);
  radio.eps_mp = entries.number("eps_mp", radio.eps_mp);
  radio.payload_bits = entries.number("payload_bits", radio.payload_bits);

  config.setup.weights.beta = entries.number("beta", config.setup.weights.beta);

  FireflyParams& ff = config.setup.firefly;
  ff = FireflyParams::for_field(field.side_length);
  ff.population = entries.count("population", ff.population);
  ff.max_generations = entries.count("max_generations", ff.max_generations);
  ff.beta0 = entries.number("beta0", ff.beta0);
  ff.gamma = entries.number("gamma", ff.gamma);
  ff.alpha = entries.number("alpha", ff.alpha);
  ff.attractiveness_exponent = entries.number("attractiveness_exponent", ff.attractiveness_exponent);

  config.setup.jumper.eta = entries.count("eta", config.setup.jumper.eta);
  config.setup.jumper.omega = entries.number("omega", config.setup.jumper.omega);
  config.setup.leach_p = entries.number("leach_p", field.cluster_fraction);

  if (const Entry* e = entries.find("seeds")) {
    try {
      config.seeds = parse_seed_list(e->value);
    } catch (const ConfigError& err) {
      Entries::fail(*e, "seeds", err.what());
    }
  } else {
    config.seeds = parse_seed_list("1-20");
  }
  config.output_dir = entries.text("output_dir", config.output_dir);

  config.validate();
  return config;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string dump_config(const ExperimentConfig& config) {
  const SimulationSetup& s = config.setup;
  std::ostringstream out;
  out.imbue(std::locale::classic());
  out << "# resolved wsnsim configuration\n";
  out << "side_length = " << format_double(s.field.side_length) << '\n';
  out << "node_count = " << s.field.node_count << '\n';
  out << "bs_x = " << format_double(s.field.base_station.x) << '\n';
  out << "bs_y = " << format_double(s.field.base_station.y) << '\n';
  out << "cluster_fraction = " << format_double(s.field.cluster_fraction) << '\n';
  out << "energy_mode = " << (s.field.energy_mode == EnergyMode::heterogeneous ? "heterogeneous" : "homogeneous")
      << '\n';
  out << "initial_energy = " << format_double(s.field.initial_energy) << '\n';
  out << "e_elec = " << format_double(s.radio.e_elec) << '\n';
  out << "e_da = " << format_double(s.radio.e_da) << '\n';
  out << "eps_fs = " << format_double(s.radio.eps_fs) << '\n';
  out << "eps_mp = " << format_double(s.radio.eps_mp) << '\n';
  out << "payload_bits = " << format_double(s.radio.payload_bits) << '\n';
  out << "beta = " << format_double(s.weights.beta) << '\n';
  out << "population = " << s.firefly.population << '\n';
  out << "max_generations = " << s.firefly.max_generations << '\n';
  out << "beta0 = " << format_double(s.firefly.beta0) << '\n';
  out << "gamma = " << format_double(s.firefly.gamma) << '\n';
  out << "alpha = " << format_double(s.firefly.alpha) << '\n';
  out << "attractiveness_exponent = " << format_double(s.firefly.attractiveness_exponent) << '\n';
  out << "eta = " << s.jumper.eta << '\n';
  out << "omega = " << format_double(s.jumper.omega) << '\n';
  out << "leach_p = " << format_double(s.leach_p) << '\n';
  out << "seeds = " << format_seeds(config.seeds) << '\n';
  out << "output_dir = " << config.output_dir << '\n';
  return out.str();
}

}  // namespace wsnsim
