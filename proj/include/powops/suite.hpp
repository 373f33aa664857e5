#pragma once

#include <string>
#include <vector>

#include "powops/common.hpp"

namespace powops {

/// One executed check. `check` is the registry id (also usable as a config
/// key and as the external reference token in `ref`); `params` echoes the
/// fully resolved parameter object as canonical JSON text; `status` is
/// "pass", "fail", or "skip" (skip = enumeration budget exceeded, or a
/// sweep combination outside the check's domain); `witness` carries the
/// payload — canonical polynomials, character vectors, lattice bases, or a
/// concrete counterexample on failure. `ms` is wall time and is excluded
/// from the determinism contract.
struct VerificationReport {
    std::string check;
    std::string title;
    std::string ref;
    std::string params;
    std::string status;
    std::string witness;
    double ms = 0.0;
};

/// One JSON object per report (single line, no trailing newline).
std::string report_json(const VerificationReport& r);
/// Aligned human-readable form.
std::string report_text(const VerificationReport& r);

/// Registry ids in canonical order.
std::vector<std::string> suite_check_ids();
/// One-line description of a registered check.
std::string check_title(const std::string& id);

/// Run one registered check. `params_json` is a JSON object; omitted keys
/// take documented defaults, unknown keys are rejected. The reserved key
/// "expect" ("pass" or "fail", default "pass") inverts the pass criterion:
/// with "fail" the report passes exactly when the underlying check fails.
VerificationReport run_check(const std::string& id, const std::string& params_json);

struct SuiteOptions {
    int jobs = 1;
};

/// Run a config: a JSON object mapping check id -> parameter grid, where a
/// grid is an object (array values iterate, everything else is a single
/// value; to pass a literal array parameter, wrap it in an outer array) or
/// an array of such objects. Expansion is depth-first in key order with the
/// last key varying fastest. Reports come back in config order regardless
/// of worker count. An empty config object yields an empty list.
std::vector<VerificationReport> run_suite(const std::string& config_json,
                                          const SuiteOptions& opts = {});

/// The full default grid (used when no config file is given).
std::string default_suite_config();

/// True when no report has status "fail" (skips do not count).
bool all_passed(const std::vector<VerificationReport>& reports);

}  // namespace powops
