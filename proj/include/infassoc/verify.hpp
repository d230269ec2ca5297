#pragma once
// The acceptance checklist: ten independently scored checks covering face
// counts, dimension formulas, boundary shadows, cell classification, group
// laws, the action, faithfulness witnesses, distance sanity, and isometry
// consistency. Every comparison is exact, and a fixed seed determines every
// sampled run.

#include <cstdint>
#include <string>
#include <vector>

namespace infassoc {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

CriterionResult run_criterion(int number, std::uint64_t seed = 2026);
std::vector<CriterionResult> run_all_criteria(std::uint64_t seed = 2026);

} // namespace infassoc
