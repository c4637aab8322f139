#pragma once

#include <optional>
#include <string>
#include <vector>

#include "liftobs/abelian.hpp"

namespace liftobs {

struct VerifyOptions {
    std::optional<int> n;            // restricts the dimension / order bound where a suite has one
    std::optional<FgAbGroup> gamma;  // restricts the coefficient group where a suite has one
    int jobs = 1;                    // accepted for interface compatibility; suites run serially
    bool fault_stilde = false;       // test hook: breaks the alternating signs of the top evaluation
};

struct VerifyResult {
    std::string suite;
    bool pass = true;
    long checked = 0;
    std::vector<std::string> counterexamples;  // cochain file format with a case label line
    std::vector<std::string> notes;
};

const std::vector<std::string>& suite_names();

/**
 * Run one verification suite. Each suite exhausts (or samples, where noted) a
 * family pinned by the module properties it certifies; see README for the
 * suite-by-suite inventory.
 */
VerifyResult run_suite(const std::string& name, const VerifyOptions& opts);

} // namespace liftobs
