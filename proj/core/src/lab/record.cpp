#include "opdiff/lab/record.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace opdiff::lab {

namespace {

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string opt(const std::optional<double>& v) { return v ? num(*v) : std::string{}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

nlohmann::json jnum(double v) {
  if (std::isfinite(v)) return v;
  return num(v);
}

nlohmann::json jopt(const std::optional<double>& v) { return v ? jnum(*v) : nlohmann::json(nullptr); }

}  // namespace

ResultRow residual_row(std::string experiment, std::string check, double value, double tol) {
  ResultRow r;
  r.experiment = std::move(experiment);
  r.check = std::move(check);
  r.lhs = value;
  r.rhs = 0.0;
  r.ratio = std::numeric_limits<double>::quiet_NaN();
  r.tol = tol;
  r.pass = std::isfinite(value) && value <= tol;
  return r;
}

ResultRow bound_row(std::string experiment, std::string check, double lhs, double rhs, double tol) {
  ResultRow r;
  r.experiment = std::move(experiment);
  r.check = std::move(check);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs > 0 ? lhs / rhs : (lhs == 0 ? 0.0 : std::numeric_limits<double>::infinity());
  r.tol = tol;
  r.pass = std::isfinite(r.ratio) && r.ratio <= 1.0 + tol;
  return r;
}

ResultRow equality_row(std::string experiment, std::string check, double lhs, double rhs, double tol) {
  ResultRow r;
  r.experiment = std::move(experiment);
  r.check = std::move(check);
  r.lhs = lhs;
  r.rhs = rhs;
  r.ratio = rhs != 0 ? lhs / rhs : (lhs == 0 ? 1.0 : std::numeric_limits<double>::infinity());
  r.tol = tol;
  r.pass = std::isfinite(r.ratio) && std::abs(r.ratio - 1.0) <= tol;
  return r;
}

ResultRow failure_row(std::string experiment, std::string check, const std::string& reason) {
  ResultRow r;
  r.experiment = std::move(experiment);
  r.check = std::move(check);
  r.lhs = r.rhs = r.ratio = std::numeric_limits<double>::quiet_NaN();
  r.pass = false;
  r.notes = reason;
  return r;
}

bool ResultRecord::all_pass() const {
  for (const auto& r : rows)
    if (!r.pass) return false;
  return true;
}

std::string to_csv(const ResultRecord& rec) {
  std::ostringstream os;
  os << kCsvHeader << '\n';
  for (const auto& r : rec.rows) {
    os << csv_field(r.experiment) << ',' << csv_field(r.check) << ',' << (r.n ? std::to_string(*r.n) : "") << ','
       << opt(r.p) << ',' << opt(r.q) << ',' << opt(r.r) << ',' << num(r.lhs) << ',' << num(r.rhs) << ','
       << num(r.ratio) << ',' << num(r.tol) << ',' << (r.pass ? "true" : "false") << ',' << csv_field(r.notes)
       << '\n';
  }
  return os.str();
}

std::string to_json(const ResultRecord& rec) {
  nlohmann::json j;
  j["experiment"] = rec.experiment;
  j["config_hash"] = rec.config_hash;
  j["config"] = nlohmann::json::parse(rec.config_json);
  j["version"] = rec.version;
  j["wall_time_s"] = rec.wall_time_s;
  j["all_pass"] = rec.all_pass();
  auto& rows = j["rows"] = nlohmann::json::array();
  for (const auto& r : rec.rows) {
    rows.push_back({{"experiment", r.experiment},
                    {"check", r.check},
                    {"n", r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr)},
                    {"p", jopt(r.p)},
                    {"q", jopt(r.q)},
                    {"r", jopt(r.r)},
                    {"lhs", jnum(r.lhs)},
                    {"rhs", jnum(r.rhs)},
                    {"ratio", jnum(r.ratio)},
                    {"tol", jnum(r.tol)},
                    {"pass", r.pass},
                    {"notes", r.notes}});
  }
  return j.dump(2) + "\n";
}

void write_record(const ResultRecord& rec, const std::string& path, const std::string& format) {
  std::string body;
  if (format == "csv") body = to_csv(rec);
  else if (format == "json") body = to_json(rec);
  else throw std::invalid_argument("unknown output format '" + format + "'");
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
}

}  // namespace opdiff::lab
