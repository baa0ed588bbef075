#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace e7dirac {

struct AcceptanceOptions {
  std::filesystem::path fixture_dir;
  unsigned jobs = 1;
  std::int64_t height_cap = 400;  // u-large gap scan
  std::int64_t coord_cap = 64;    // Phi enumeration
  std::size_t random_ktypes = 500;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// Runs criteria 1..13 in order. on_result, if set, is called as each one finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// A single criterion; throws std::out_of_range for ids outside 1..13.
CriterionResult run_criterion(int id, const AcceptanceOptions& opt);

std::string format_result(const CriterionResult& r);

}  // namespace e7dirac
