#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace combsim::propcheck {

struct Config {
    std::uint64_t seed = 1;
    /// Sample count for the sampled criteria.
    int count = 500;
    /// Largest space size drawn by the samplers (clamped per criterion).
    int max_n = 7;
    /// Brute-force cap handed to the enumeration-based oracles.
    int bound = 8;
};

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// One function per acceptance criterion. Each draws its own deterministic
// sample from config.seed, compares the structural machinery against the
// enumeration-based oracles at the stated scale, and never tolerates a
// single disagreement.

CriterionResult check_reflection_symmetry_equivalence(const Config& config);  // 1
CriterionResult check_ip_characterizations(const Config& config);             // 2
CriterionResult check_fiber_partition_theorems(const Config& config);         // 3
CriterionResult check_group_sanity(const Config& config);                     // 4
CriterionResult check_similarity_criteria(const Config& config);              // 5
CriterionResult check_constructor_round_trips(const Config& config);          // 6
CriterionResult check_named_instances(const Config& config);                  // 7
CriterionResult check_class_closure_conditions(const Config& config);         // 8
CriterionResult check_structural_performance(const Config& config);           // 9

std::vector<CriterionResult> run_all(const Config& config);

}  // namespace combsim::propcheck
