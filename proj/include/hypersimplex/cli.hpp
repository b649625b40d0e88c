#pragma once

// Command execution behind the hypersimplex command-line tool: flag
// validation, JSON/CSV output, an on-disk result cache and the report runner.

#include <chrono>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hypersimplex/serialize.hpp"

namespace hypersimplex::cli {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr int kReportMaxN = 13;

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

struct Command {
  std::string verb;
  int n = 0;
  int k = 2;
  int r = 1;
  std::optional<std::string> method;  // hstar only
  std::optional<int> t;               // ehrhart only
  std::optional<std::string> order;   // shelling, verify-shelling: paper | general
  std::string format = "json";
  std::string out;  // empty: stdout
  std::string cache_dir;
  std::optional<double> budget_seconds;
};

const std::vector<std::string>& verbs();

// Throws a parameter error naming the first bad flag.
void validate(const Command& cmd);

// Exit status mapping: 0 ok, 1 inconsistency, 2 usage, 3 resource.
int exit_code(ErrorKind kind);

// Content-addressed store of JSON payloads: the file name is the FNV-1a hash
// of the canonical key, the file holds key and value, writes go through a
// temporary file and a rename.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  std::optional<Json> get(const Json& key) const;
  void put(const Json& key, const Json& value) const;
  static std::string hash(const Json& key);
  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path dir_;
};

// Canonical key of (verb, params, toolkit version).
Json cache_key(const std::string& verb, const Json& params);

struct Outcome {
  int exit_code = 0;
  Json payload;      // data, or an {"error": ...} body
  Json meta;         // timings and cache status; never part of the payload
  std::string body;  // payload rendered in the requested format
};

Outcome execute(const Command& cmd, const ResultCache* cache = nullptr);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = true;
  int instances = 0;
  std::string detail;
  double seconds = 0;
};

struct Discrepancy {
  std::string method;
  int n = 0;
  int r = 0;
  int degree = 0;
  BigInt closed_form;
  BigInt reference;
};

struct Report {
  int max_n = 0;
  std::vector<CriterionResult> criteria;
  std::vector<Discrepancy> discrepancies;
  std::vector<std::string> warnings;
  bool complete = true;  // false when the deadline cut a criterion short
  bool ok() const;
};

// Runs every acceptance criterion restricted to instances with n <= max_n;
// `only` selects criteria by number (empty: all).
Report run_report(int max_n, const ResultCache* cache = nullptr, Deadline deadline = {},
                  const std::set<int>& only = {});

// Pass/fail table without timings; the timings go to report_meta.
Json to_json(const Report& report);
Json report_meta(const Report& report);
std::string report_csv(const Report& report);

// Full command-line entry point: parses argv, executes, writes the body to
// stdout or --out and the meta object to stderr.
int run(int argc, char** argv);

}  // namespace hypersimplex::cli
