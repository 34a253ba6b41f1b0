#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hopfrt/tree.hpp"

namespace hopfrt {

struct VerifyResult {
  std::string relation;
  std::string instance;
  bool passed = true;
  std::string first_mismatch;  // empty when passed
};

struct VerifyReport {
  std::string suite;
  std::size_t max_degree = 0;
  std::uint64_t seed = 0;
  std::vector<VerifyResult> results;

  bool all_passed() const;
  /// `{"schema":1,"suite":...,"max_degree":...,"seed":...,"passed":...,"results":[...]}`
  std::string to_json() const;
  /// One line per relation with pass counts, then every failing instance.
  std::string to_text() const;
};

inline constexpr int kCmOrder = 8;
inline constexpr int kCmTrials = 10;

VerifyReport verify_hopf(std::size_t max_degree);
VerifyReport verify_growth(std::size_t max_degree);
VerifyReport verify_butcher(std::size_t max_degree, std::uint64_t seed);
VerifyReport verify_cm(std::size_t max_degree, std::uint64_t seed);

/// `suite` is one of hopf, growth, butcher, cm, all. Throws
/// std::invalid_argument for anything else.
VerifyReport run_suite(const std::string& suite, std::size_t max_degree, std::uint64_t seed);

/// Rooted trees with n vertices from canonical level sequences, generated
/// independently of enumerate_trees.
std::vector<RootedTree> level_sequence_trees(std::size_t n);

}  // namespace hopfrt
