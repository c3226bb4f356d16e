#include "cwlab/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "cwlab/errors.hpp"

namespace cwlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double x = 0.0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + ": cannot parse '" + value + "' as a number");
  }
  if (pos != value.size())
    throw ConfigError("config: " + key + ": trailing characters in '" + value + "'");
  return x;
}

long parse_int(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long x = 0;
  try {
    x = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config: " + key + ": cannot parse '" + value + "' as an integer");
  }
  if (pos != value.size())
    throw ConfigError("config: " + key + ": trailing characters in '" + value + "'");
  return x;
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(value);
  while (std::getline(is, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

const char* const kScalarKeys[] = {"gamma",          "v_plus",        "u_plus",
                                   "v_m",            "v_minus",       "lambda_weight",
                                   "xi_min",         "xi_max",        "n_cells",
                                   "cfl",            "t_end",         "output_interval",
                                   "seed",           "strength_cap",  "amplitude_cap"};

bool is_scalar_key(const std::string& key) {
  return std::find(std::begin(kScalarKeys), std::end(kScalarKeys), key) != std::end(kScalarKeys);
}

bool is_perturbation_key(const std::string& key, int* index, std::string* field) {
  if (key.rfind("perturbation.", 0) != 0) return false;
  const std::string rest = key.substr(13);
  const std::size_t dot = rest.find('.');
  if (dot == std::string::npos) return false;
  const std::string idx = rest.substr(0, dot);
  if (idx.empty() || !std::all_of(idx.begin(), idx.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return false;
  *index = std::stoi(idx);
  *field = rest.substr(dot + 1);
  return true;
}

void apply_kv(RunConfig& cfg, const std::string& key, const std::string& value) {
  int pidx = 0;
  std::string pfield;
  if (key == "gamma") {
    cfg.gamma = parse_double(key, value);
  } else if (key == "v_plus") {
    cfg.v_plus = parse_double(key, value);
  } else if (key == "u_plus") {
    cfg.u_plus = parse_double(key, value);
  } else if (key == "v_m") {
    cfg.v_m = parse_double(key, value);
  } else if (key == "v_minus") {
    cfg.v_minus = parse_double(key, value);
  } else if (key == "lambda_weight") {
    cfg.lambda_weight = parse_double(key, value);
  } else if (key == "xi_min") {
    cfg.xi_min = parse_double(key, value);
  } else if (key == "xi_max") {
    cfg.xi_max = parse_double(key, value);
  } else if (key == "n_cells") {
    cfg.n_cells = static_cast<int>(parse_int(key, value));
  } else if (key == "cfl") {
    cfg.cfl = parse_double(key, value);
  } else if (key == "t_end") {
    cfg.t_end = parse_double(key, value);
  } else if (key == "output_interval") {
    cfg.output_interval = parse_double(key, value);
  } else if (key == "seed") {
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  } else if (key == "strength_cap") {
    cfg.strength_cap = parse_double(key, value);
  } else if (key == "amplitude_cap") {
    cfg.amplitude_cap = parse_double(key, value);
  } else if (key == "snapshot_times") {
    cfg.snapshot_times.clear();
    for (const std::string& item : split_list(value))
      cfg.snapshot_times.push_back(parse_double(key, item));
  } else if (is_perturbation_key(key, &pidx, &pfield)) {
    if (pidx < 0 || pidx > 63) throw ConfigError("config: " + key + ": index out of range");
    if (cfg.perturbations.size() <= static_cast<std::size_t>(pidx))
      cfg.perturbations.resize(static_cast<std::size_t>(pidx) + 1);
    PerturbationSpec& p = cfg.perturbations[static_cast<std::size_t>(pidx)];
    if (pfield == "kind") {
      p.kind = value;
    } else if (pfield == "target") {
      if (value == "v") p.target = PerturbationSpec::Target::v;
      else if (value == "u") p.target = PerturbationSpec::Target::u;
      else throw ConfigError("config: " + key + ": target must be v or u");
    } else if (pfield == "amplitude") {
      p.amplitude = parse_double(key, value);
    } else if (pfield == "center") {
      p.center = parse_double(key, value);
    } else if (pfield == "width") {
      p.width = parse_double(key, value);
    } else {
      throw ConfigError("config: unknown perturbation field '" + pfield + "' in key " + key);
    }
  } else if (key.rfind("sweep.", 0) == 0) {
    const std::string inner = key.substr(6);
    int dummy = 0;
    std::string df;
    if (!is_scalar_key(inner) && !is_perturbation_key(inner, &dummy, &df))
      throw ConfigError("config: sweep over unknown key '" + inner + "'");
    cfg.sweep_lists[inner] = split_list(value);
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (!(cfg.gamma > 1.0)) throw ConfigError("config: gamma must exceed 1");
  if (!(cfg.v_plus > 0.0)) throw ConfigError("config: v_plus must be positive");
  if (!(cfg.v_m > 0.0)) throw ConfigError("config: v_m must be positive");
  if (!(cfg.v_minus > 0.0)) throw ConfigError("config: v_minus must be positive");
  if (!(cfg.v_minus <= cfg.v_m && cfg.v_m <= cfg.v_plus))
    throw ConfigError("config: states must satisfy the ordering v_minus < v_m < v_plus "
                      "(degenerate equality allowed)");
  if (cfg.n_cells < 16) throw ConfigError("config: n_cells must be at least 16");
  if (!(cfg.cfl > 0.0 && cfg.cfl <= 1.0)) throw ConfigError("config: cfl must lie in (0, 1]");
  if (!(cfg.t_end >= 0.0)) throw ConfigError("config: t_end must be non-negative");
  if (!(cfg.output_interval > 0.0))
    throw ConfigError("config: output_interval must be positive");
  if (!(cfg.strength_cap > 0.0)) throw ConfigError("config: strength_cap must be positive");
  if (!(cfg.amplitude_cap >= 0.0))
    throw ConfigError("config: amplitude_cap must be non-negative");
  if (cfg.lambda_weight && !(*cfg.lambda_weight > 0.0))
    throw ConfigError("config: lambda_weight must be positive");
  if (cfg.xi_min && cfg.xi_max && !(*cfg.xi_min < 0.0 && 0.0 < *cfg.xi_max))
    throw ConfigError("config: domain must satisfy xi_min < 0 < xi_max");
  for (double t : cfg.snapshot_times)
    if (!(t >= 0.0)) throw ConfigError("config: snapshot_times must be non-negative");
  for (std::size_t i = 0; i < cfg.perturbations.size(); ++i) {
    const PerturbationSpec& p = cfg.perturbations[i];
    const std::string where = "perturbation." + std::to_string(i);
    if (p.kind != "gaussian")
      throw ConfigError("config: " + where + ".kind must be gaussian");
    if (!(p.width > 0.0)) throw ConfigError("config: " + where + ".width must be positive");
    if (!(std::abs(p.amplitude) <= cfg.amplitude_cap))
      throw ConfigError("config: " + where + ".amplitude exceeds amplitude_cap");
  }
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: line " + std::to_string(lineno) + ": expected key = value");
    apply_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config(os.str());
}

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
  apply_kv(cfg, key, value);
}

}  // namespace cwlab
