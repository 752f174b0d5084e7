#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "treealg/affine.hpp"

namespace treealg {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs every acceptance criterion over the alphabet {a, b, c}. Criteria
/// are independent; an exception inside one marks only that one failed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = kDefaultSeed,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// One line per criterion: `[PASS] AC01 title (0.01s): detail`.
void print_result(std::ostream& out, const CriterionResult& r);

}  // namespace treealg
