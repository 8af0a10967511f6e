// opdiff-lab: batch front end for the operator-difference checks.
//
// Exit status: 0 when every row passes, 1 when a row fails, 2 on an invalid
// configuration, 3 when the result file cannot be written.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "opdiff/lab/experiments.hpp"

namespace {

using opdiff::lab::ExperimentConfig;

struct Flags {
  std::string config;
  std::map<std::string, std::vector<std::string>> values;
};

// Registers --name on `sub`; when given, its strings override the config file.
void flag(CLI::App* sub, Flags& flags, const std::string& name, const std::string& help, bool list = false,
          char delim = ',') {
  auto* opt = sub->add_option("--" + name, flags.values[name], help);
  if (list) opt->delimiter(delim)->expected(1, -1);
  else opt->expected(1);
}

std::string output_path(const ExperimentConfig& cfg) {
  const char* dir = std::getenv("OPDIFF_OUT_DIR");
  std::string out = cfg.output;
  if (dir && *dir) {
    if (out.empty()) out = opdiff::lab::experiment_name(cfg.experiment) + "." + cfg.format;
    if (std::filesystem::path(out).is_relative()) out = (std::filesystem::path(dir) / out).string();
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical checks for operator differences f(H1) - f(H0)"};
  app.set_version_flag("--version", opdiff::lab::version_string());
  app.require_subcommand(1);

  Flags flags;
  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs = {
      {"verify", "Identity suite on seeded random pairs"},
      {"sweep", "DOI Hoelder bound over symbols and exponent triples"},
      {"besov", "Dyadic Besov functional of sampled functions"},
      {"bmo", "BMO estimates from mean oscillation and the divided-difference kernel"},
      {"sharpness", "Hilbert-transform pair and norm ratio against the BMO estimate"},
      {"falpha", "Besov slopes and Fourier asymptotics of the log-singular family"},
      {"smoothness", "Smoothness norms of a multiplication-operator model"},
      {"interpolation", "Analytic family endpoint checks"},
      {"run", "Run the experiment named in the config file"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--config", flags.config, "TOML-style or JSON config file")->check(CLI::ExistingFile);
    flag(sub, flags, "seed", "Seed for all random ensembles");
    flag(sub, flags, "out", "Output file (stdout when omitted)");
    flag(sub, flags, "format", "csv or json");
    flag(sub, flags, "trials", "Trials per dimension or per sweep");
    flag(sub, flags, "dims", "Matrix dimensions, e.g. 8,16,32", true);
    flag(sub, flags, "triples", "Hoelder triples p:q:r, e.g. 1:2:2,2/3:1:2,1:1:inf", true);
    flag(sub, flags, "tol-disc", "Discretization allowance for bounds");
    // Function specs contain commas, so the option is repeated instead of split.
    sub->add_option("--function", flags.values["function"], "Function spec (repeatable)")->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    flag(sub, flags, "p", "Exponents p", true);
    flag(sub, flags, "q", "Exponents q", true);
    flag(sub, flags, "alpha", "F_alpha exponents", true);
    flag(sub, flags, "grid", "x_min:x_max:N");
    flag(sub, flags, "model", "Model spec, e.g. random:cells=64,h=2,k=2");
    flag(sub, flags, "j-min", "Lowest dyadic band");
    flag(sub, flags, "j-max", "Highest dyadic band");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  ExperimentConfig cfg;
  try {
    if (!flags.config.empty()) cfg = opdiff::lab::load_config(flags.config);
    if (cmd != "run") cfg.experiment = opdiff::lab::parse_experiment(cmd);
    else if (flags.config.empty()) throw opdiff::lab::ConfigError("run: --config is required");
    for (const auto& [name, vals] : flags.values)
      if (!vals.empty()) opdiff::lab::apply_key(cfg, name, vals, "--" + name);
    cfg.resolved().validate();
  } catch (const std::exception& e) {
    std::cerr << "opdiff-lab: invalid configuration: " << e.what() << "\n";
    return 2;
  }

  opdiff::lab::ResultRecord rec;
  try {
    rec = opdiff::lab::run(cfg);
  } catch (const opdiff::lab::ConfigError& e) {
    std::cerr << "opdiff-lab: invalid configuration: " << e.what() << "\n";
    return 2;
  }

  const std::string out = output_path(cfg);
  try {
    if (out.empty()) std::cout << (cfg.format == "json" ? opdiff::lab::to_json(rec) : opdiff::lab::to_csv(rec));
    else opdiff::lab::write_record(rec, out, cfg.format);
  } catch (const std::exception& e) {
    std::cerr << "opdiff-lab: " << e.what() << "\n";
    return 3;
  }

  std::size_t failed = 0;
  for (const auto& r : rec.rows) failed += r.pass ? 0 : 1;
  std::cerr << rec.experiment << ": " << rec.rows.size() << " rows, " << failed << " failed, config " << rec.config_hash
            << ", " << rec.wall_time_s << " s\n";
  return failed == 0 ? 0 : 1;
}
