#pragma once

#include <optional>
#include <string>
#include <vector>

namespace opdiff::lab {

struct ResultRow {
  std::string experiment;
  std::string check;
  std::optional<long long> n;
  std::optional<double> p, q, r;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string notes;
};

// lhs = value, rhs = 0, pass iff value <= tol.
ResultRow residual_row(std::string experiment, std::string check, double value, double tol);
// ratio = lhs / rhs, pass iff ratio <= 1 + tol.
ResultRow bound_row(std::string experiment, std::string check, double lhs, double rhs, double tol);
// ratio = lhs / rhs, pass iff |ratio - 1| <= tol.
ResultRow equality_row(std::string experiment, std::string check, double lhs, double rhs, double tol);
// Failed row carrying the reason in the notes.
ResultRow failure_row(std::string experiment, std::string check, const std::string& reason);

struct ResultRecord {
  std::string experiment;
  std::string config_hash;
  std::string config_json;  // canonical echo
  std::string version;
  double wall_time_s = 0.0;
  std::vector<ResultRow> rows;

  bool all_pass() const;
};

inline const char* const kCsvHeader = "experiment,check,n,p,q,r,lhs,rhs,ratio,tol,pass,notes";

std::string to_csv(const ResultRecord& rec);
std::string to_json(const ResultRecord& rec);
// Format "csv" or "json"; creates parent directories.
void write_record(const ResultRecord& rec, const std::string& path, const std::string& format);

}  // namespace opdiff::lab
