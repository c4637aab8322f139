#pragma once

#include <string>

#include "liftobs/engine.hpp"

namespace liftobs {

struct ScenarioOptions {
    bool sign_ledger = false;
    bool verbose = false;
};

struct ScenarioConfig {
    CentralExtData extension;
    BundleData bundle;
    ScenarioOptions options;
};

/**
 * Read and validate a scenario document (JSON). Every violation is collected
 * and reported in one error, each with a path into the document; referenced
 * nerve/cochain/group files resolve relative to the scenario's directory.
 */
ScenarioConfig parse_scenario(const std::string& path);
ScenarioConfig parse_scenario_text(const std::string& text, const std::string& base_dir);

ObstructionReport run_compute(const ScenarioConfig& cfg);

enum class ReportFormat { Text, Machine };

std::string emit_report(const ObstructionReport& r, ReportFormat f, bool with_sign_ledger = false);

/** Inverse of the machine format: parse(emit(r)) compares equal to r. */
ObstructionReport parse_machine_report(const std::string& text);

} // namespace liftobs
