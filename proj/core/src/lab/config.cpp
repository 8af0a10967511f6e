#include "opdiff/lab/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "opdiff/doi/doi.hpp"
#include "opdiff/funcspace/dyadic.hpp"
#include "opdiff/lab/function_spec.hpp"

namespace opdiff::lab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(const std::string& where, const std::string& field, const std::string& msg) {
  throw ConfigError((where.empty() ? "" : where + ": ") + field + ": " + msg);
}

double to_real(const std::string& text) {
  std::size_t used = 0;
  const double v = std::stod(text, &used);
  if (used != text.size()) throw std::invalid_argument("trailing characters");
  return v;
}

bool power_of_two(std::size_t n) { return n >= 2 && (n & (n - 1)) == 0; }

bool transform_based(Experiment e) {
  return e == Experiment::besov || e == Experiment::bmo || e == Experiment::sharpness || e == Experiment::falpha;
}

// Splits a TOML-style list body at top-level commas; nested lists become "a:b:c".
std::vector<std::string> split_list(const std::string& body, const std::string& where) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  bool quoted = false;
  auto flush = [&] {
    std::string t = trim(cur);
    cur.clear();
    if (t.empty()) return;
    if (t.front() == '"') {
      if (t.size() < 2 || t.back() != '"') fail(where, "value", "unterminated string");
      t = t.substr(1, t.size() - 2);
    } else if (t.front() == '[') {
      if (t.back() != ']') fail(where, "value", "unterminated list");
      std::string joined;
      for (const auto& s : split_list(t.substr(1, t.size() - 2), where)) joined += (joined.empty() ? "" : ":") + s;
      t = joined;
    }
    out.push_back(t);
  };
  for (char c : body) {
    if (c == '"') quoted = !quoted;
    if (!quoted && c == '[') ++depth;
    if (!quoted && c == ']') --depth;
    if (!quoted && depth == 0 && c == ',') {
      flush();
      continue;
    }
    cur += c;
  }
  if (quoted || depth != 0) fail(where, "value", "unbalanced quotes or brackets");
  flush();
  return out;
}

std::vector<std::string> toml_values(const std::string& raw, const std::string& where) {
  const std::string v = trim(raw);
  if (v.empty()) fail(where, "value", "missing value");
  if (v.front() == '[') {
    if (v.back() != ']') fail(where, "value", "list must close on the same line");
    return split_list(v.substr(1, v.size() - 2), where);
  }
  return split_list(v, where);
}

std::string json_scalar(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number() || j.is_boolean()) return j.dump();
  throw ConfigError("expected a string or number, got " + j.dump());
}

std::vector<std::string> json_values(const std::string& key, const nlohmann::json& j) {
  std::vector<std::string> out;
  auto joined = [](const nlohmann::json& arr) {
    std::string s;
    for (const auto& e : arr) s += (s.empty() ? "" : ":") + json_scalar(e);
    return s;
  };
  if (!j.is_array()) return {json_scalar(j)};
  if (key == "grid") return {joined(j)};
  for (const auto& e : j) out.push_back(e.is_array() ? joined(e) : json_scalar(e));
  return out;
}

nlohmann::json exponent_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::verify: return "verify";
    case Experiment::sweep: return "sweep";
    case Experiment::besov: return "besov";
    case Experiment::bmo: return "bmo";
    case Experiment::sharpness: return "sharpness";
    case Experiment::falpha: return "falpha";
    case Experiment::smoothness: return "smoothness";
    case Experiment::interpolation: return "interpolation";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (auto e : {Experiment::verify, Experiment::sweep, Experiment::besov, Experiment::bmo, Experiment::sharpness,
                 Experiment::falpha, Experiment::smoothness, Experiment::interpolation})
    if (experiment_name(e) == name) return e;
  throw ConfigError("experiment: unknown experiment '" + name + "'");
}

double parse_exponent(const std::string& text) {
  const std::string t = trim(text);
  if (t == "inf" || t == "infinity" || t == "Inf") return kInf;
  const auto slash = t.find('/');
  if (slash != std::string::npos) return to_real(trim(t.substr(0, slash))) / to_real(trim(t.substr(slash + 1)));
  return to_real(t);
}

HolderTriple parse_triple(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw ConfigError("triples: expected p:q:r, got '" + text + "'");
  HolderTriple t;
  try {
    t.p = parse_exponent(parts[0]);
    t.q = parse_exponent(parts[1]);
    t.r = parse_exponent(parts[2]);
  } catch (const std::invalid_argument&) {
    throw ConfigError("triples: not a number in '" + text + "'");
  }
  try {
    doi::check_holder_triple(t.p, t.q, t.r);
  } catch (const InvalidInput& e) {
    throw ConfigError(std::string("triples: ") + e.what());
  }
  return t;
}

funcspace::UniformGrid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3) throw ConfigError("grid: expected x_min:x_max:N, got '" + text + "'");
  double lo = 0, hi = 0, n = 0;
  try {
    lo = to_real(parts[0]);
    hi = to_real(parts[1]);
    n = to_real(parts[2]);
  } catch (const std::invalid_argument&) {
    throw ConfigError("grid: not a number in '" + text + "'");
  }
  if (!(hi > lo)) throw ConfigError("grid: x_max must exceed x_min");
  if (n < 2 || n != std::floor(n)) throw ConfigError("grid: N must be an integer >= 2");
  return funcspace::UniformGrid(lo, hi, static_cast<std::size_t>(n));
}

void apply_key(ExperimentConfig& cfg, const std::string& key_in, const std::vector<std::string>& values,
               const std::string& where) {
  std::string key = key_in;
  for (auto& c : key)
    if (c == '-') c = '_';
  if (key == "function") key = "functions";
  if (key == "out") key = "output";
  auto one = [&]() -> const std::string& {
    if (values.size() != 1) fail(where, key, "expected a single value");
    return values.front();
  };
  auto reals = [&](std::vector<double>& dst) {
    dst.clear();
    for (const auto& v : values) {
      try {
        dst.push_back(parse_exponent(v));
      } catch (const std::invalid_argument&) {
        fail(where, key, "not a number: '" + v + "'");
      }
    }
  };
  auto integer = [&](const std::string& v) -> long long {
    try {
      const double d = to_real(v);
      if (d != std::floor(d)) throw std::invalid_argument("fraction");
      return static_cast<long long>(d);
    } catch (const std::invalid_argument&) {
      fail(where, key, "not an integer: '" + v + "'");
    }
  };
  try {
    if (key == "experiment") cfg.experiment = parse_experiment(one());
    else if (key == "seed") {
      try {
        std::size_t used = 0;
        if (one().empty() || one().front() == '-') throw std::invalid_argument("sign");
        cfg.seed = std::stoull(one(), &used);
        if (used != one().size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        fail(where, key, "not an unsigned 64-bit integer: '" + one() + "'");
      }
    } else if (key == "dims") {
      cfg.dims.clear();
      for (const auto& v : values) cfg.dims.push_back(static_cast<int>(integer(v)));
    } else if (key == "grid") cfg.grid = parse_grid(one());
    else if (key == "triples") {
      cfg.triples.clear();
      for (const auto& v : values) cfg.triples.push_back(parse_triple(v));
    } else if (key == "functions") cfg.functions = values;
    else if (key == "p") reals(cfg.p_values);
    else if (key == "q") reals(cfg.q_values);
    else if (key == "alpha") reals(cfg.alpha_values);
    else if (key == "model") cfg.model = one();
    else if (key == "trials") cfg.trials = static_cast<int>(integer(one()));
    else if (key == "tol_disc") {
      std::vector<double> v;
      reals(v);
      if (v.size() != 1) fail(where, key, "expected a single value");
      cfg.tol_disc = v.front();
    } else if (key == "j_min") cfg.j_min = static_cast<int>(integer(one()));
    else if (key == "j_max") cfg.j_max = static_cast<int>(integer(one()));
    else if (key == "output") cfg.output = one();
    else if (key == "format") cfg.format = one();
    else fail(where, key, "unknown key");
  } catch (const ConfigError& e) {
    const std::string msg = e.what();
    // Messages from the parsers already name the field; add the location once.
    if (where.empty() || msg.rfind(where, 0) == 0) throw;
    throw ConfigError(where + ": " + msg);
  }
}

ExperimentConfig parse_config_text(const std::string& text, const std::string& source) {
  ExperimentConfig cfg;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(source + ": " + e.what());
    }
    for (const auto& [k, v] : j.items()) {
      if (v.is_null()) continue;
      std::vector<std::string> vals;
      try {
        vals = json_values(k, v);
      } catch (const ConfigError& e) {
        throw ConfigError(source + ": " + k + ": " + e.what());
      }
      apply_key(cfg, k, vals, source);
    }
    return cfg;
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno);
    // Strip comments outside quotes.
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line.resize(i);
        break;
      }
    }
    line = trim(line);
    if (line.empty() || line.front() == '[') {
      if (!line.empty() && line.back() != ']') fail(where, "line", "malformed table header");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(where, "line", "expected key = value");
    apply_key(cfg, trim(line.substr(0, eq)), toml_values(line.substr(eq + 1), where), where);
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path);
}

ExperimentConfig ExperimentConfig::resolved() const {
  ExperimentConfig c = *this;
  const Experiment e = c.experiment;
  if (c.dims.empty()) c.dims = {8, 16, 32, 64};
  if (!c.grid) {
    if (e == Experiment::besov) c.grid = funcspace::UniformGrid(-1024.0, 1024.0, std::size_t{1} << 20);
    else if (e == Experiment::falpha) c.grid = funcspace::UniformGrid(-2.0, 2.0, std::size_t{1} << 21);
    else c.grid = funcspace::UniformGrid(-32.0, 32.0, 512);
  }
  if (c.triples.empty()) c.triples = {{1, 2, 2}, {2.0 / 3.0, 1, 2}, {2, 4, 4}, {1, 1, kInf}};
  if (c.functions.empty()) {
    if (e == Experiment::besov) c.functions = {"f_alpha:alpha=1", "gauss"};
    else if (e == Experiment::bmo) c.functions = {"log_abs", "arctan", "gauss"};
    else c.functions = {"rat2", "lorentz", "gauss", "sech", "pole_pair"};
  }
  if (c.p_values.empty()) {
    if (e == Experiment::smoothness) c.p_values = {2, 3, 4, kInf};
    else c.p_values = {1, 2};
  }
  if (c.q_values.empty()) c.q_values = {2, 3, 4, 8};
  if (c.alpha_values.empty()) c.alpha_values = {0.25, 1, 2};
  if (c.model.empty()) {
    if (e == Experiment::interpolation) c.model = "random:cells=32,h=3,k=2";
    else if (e == Experiment::smoothness) c.model = "plateau:cells=384,h=2,k=2";
    else c.model = "random:cells=64,h=2,k=2";
  }
  if (c.trials == 0) c.trials = e == Experiment::sweep ? 50 : (e == Experiment::verify ? 5 : 1);
  return c;
}

void ExperimentConfig::validate() const {
  for (int d : dims)
    if (d < 2 || d > 4096) fail("", "dims", "each dimension must lie in [2, 4096], got " + std::to_string(d));
  if (grid) {
    if (!(grid->x_max > grid->x_min) || grid->n < 2) fail("", "grid", "needs x_min < x_max and N >= 2");
    if (transform_based(experiment) && !power_of_two(grid->n))
      fail("", "grid", "N = " + std::to_string(grid->n) + " is not a power of two");
  }
  for (const auto& t : triples) {
    try {
      doi::check_holder_triple(t.p, t.q, t.r);
    } catch (const InvalidInput& e) {
      fail("", "triples", e.what());
    }
  }
  for (double p : p_values)
    if (!(p > 0)) fail("", "p", "exponents must be positive");
  for (double q : q_values)
    if (!(q >= 1) || std::isinf(q)) fail("", "q", "interpolation exponents must be finite and >= 1");
  for (double a : alpha_values)
    if (!(a >= 0) || std::isinf(a)) fail("", "alpha", "must be finite and non-negative");
  if (trials < 0) fail("", "trials", "must be positive");
  if (!(tol_disc >= 0)) fail("", "tol_disc", "must be non-negative");
  if (format != "csv" && format != "json") fail("", "format", "must be csv or json, got '" + format + "'");
  for (const auto& f : functions) {
    try {
      (void)parse_spec(f);
    } catch (const InvalidInput& e) {
      fail("", "functions", e.what());
    }
  }
  if (j_min && j_max && *j_min > *j_max) fail("", "j_min", "exceeds j_max");
}

std::string ExperimentConfig::canonical_json() const {
  nlohmann::json j;
  j["experiment"] = experiment_name(experiment);
  j["seed"] = seed;
  j["dims"] = dims;
  if (grid) j["grid"] = {grid->x_min, grid->x_max, grid->n};
  else j["grid"] = nullptr;
  auto& tr = j["triples"] = nlohmann::json::array();
  for (const auto& t : triples) tr.push_back({exponent_json(t.p), exponent_json(t.q), exponent_json(t.r)});
  j["functions"] = functions;
  auto list = [](const std::vector<double>& v) {
    auto a = nlohmann::json::array();
    for (double x : v) a.push_back(exponent_json(x));
    return a;
  };
  j["p"] = list(p_values);
  j["q"] = list(q_values);
  j["alpha"] = list(alpha_values);
  j["model"] = model;
  j["trials"] = trials;
  j["tol_disc"] = tol_disc;
  j["j_min"] = j_min ? nlohmann::json(*j_min) : nlohmann::json(nullptr);
  j["j_max"] = j_max ? nlohmann::json(*j_max) : nlohmann::json(nullptr);
  j["format"] = format;
  return j.dump();
}

std::string ExperimentConfig::hash() const { return hex64(fnv1a64(canonical_json())); }

}  // namespace opdiff::lab
