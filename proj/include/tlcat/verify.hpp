#pragma once

#include <json.hpp>

#include <set>
#include <string>
#include <vector>

namespace tlcat {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

/// One verified claim.
struct Record {
  std::string id;
  std::string statement;
  std::string anchor; ///< the mathematical statement being reproduced
  Status status = Status::pass;
  std::string witness; ///< first counterexample, or a note
  nlohmann::json data = nlohmann::json::object();
};

struct Report {
  std::vector<Record> records;
  bool pass() const;
  /// 0 if every record passes, 1 if any fails, 2 if some are inconclusive
  /// and none fail.
  int exit_code() const;
};

inline const std::vector<std::string> kSuiteNames = {"relations", "traces", "hilbert",
                                                     "weyl",      "cells",  "confluence"};

struct SuiteConfig {
  int n_min = 1;
  int n_max = 4;
  int max_degree = 12;
  std::set<std::string> suites{kSuiteNames.begin(), kSuiteNames.end()};
  std::string format = "json";
  int jobs = 1;

  /// Throws std::invalid_argument for non-positive bounds, unknown suites or
  /// formats.
  void validate() const;
};

/// Parses "relations,hilbert" or "all".
std::set<std::string> parse_suites(const std::string &csv);

/// Parses "3" (just n = 3) or "1..4".
std::pair<int, int> parse_n_range(const std::string &text);

/// min(requested, TLCAT_MAX_DEGREE) when the variable is set.
int degree_ceiling(int requested);

/// Runs every selected suite for every n in range. Records are ordered by
/// suite, then n, then check, independent of `jobs`.
Report run(const SuiteConfig &config);

/// json, csv or md.
std::string emit(const Report &report, const std::string &format);

} // namespace tlcat
