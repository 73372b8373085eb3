#pragma once

#include <torvo/representation.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace torvo {

struct CheckConfig {
  std::vector<std::string> families;
  int M = 3;
  int N = 2;
  int q = 2;
  int max_degree = 6;   // doubled energy cutoff for generated states
  int box = 2;          // bound on exponent and lattice coordinates
  int samples = 100;    // random instances per clause
  std::uint64_t seed = 1;
  int jobs = 1;

  RepConfig rep() const { return {M, N, q}; }
  void validate() const;
};

struct ClauseTally {
  std::string clause;
  std::size_t hits = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t adjudicated = 0;   // known misprints, reported but not counted as failures
  std::string adjudication;
  nlohmann::json counterexample;  // first failure (or first adjudicated discrepancy), else null
};

struct FamilyReport {
  std::string family;
  std::vector<ClauseTally> clauses;
  double elapsed_ms = 0;
  bool passed = false;
};

struct CheckReport {
  CheckConfig config;
  std::vector<FamilyReport> families;
  bool passed = false;

  nlohmann::json to_json(bool include_timings = true) const;
};

const std::vector<std::string>& family_ids();

TensorState gen_state(const CheckConfig& cfg, std::uint64_t stream);

FamilyReport run_family(const std::string& family, const CheckConfig& cfg);
CheckReport run_check(const CheckConfig& cfg);

struct ReplayResult {
  std::string family;
  std::string clause;
  bool found = false;        // the item still produces an outcome for that clause
  bool passed = false;       // the check holds now
  bool reproduced = false;   // the recorded detail was regenerated bit-exactly
  nlohmann::json detail;
};

ReplayResult replay(const nlohmann::json& counterexample);

nlohmann::json encode(const CheckConfig& cfg);
CheckConfig decode_check_config(const nlohmann::json& j);

}  // namespace torvo
