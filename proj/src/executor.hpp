#pragma once

#include <map>
#include <string>
#include <vector>

#include "fixture.hpp"
#include "skill.hpp"

namespace skillkit {

enum class ExecStatus { Success, Partial, Failed };

std::string_view to_string(ExecStatus status);

struct StepReportEntry {
    int index = 0;
    bool ok = true;
    std::string kind;
    std::string message;
};

/// Result of grounded execution: per-step outcomes up to the first blocking
/// error, overall status, final URL, and the backend event log.
struct ExecutionReport {
    std::string skill;
    ExecStatus status = ExecStatus::Success;
    int failed_step = -1; // index of the first blocking error (partial/failed)
    std::vector<StepReportEntry> steps;
    std::string final_url;
    std::string error; // substitution error message when no step ran
    std::vector<ojson> events;

    ojson to_json() const;
};

/// Substitutes arguments and applies the action program step by step, halting
/// at the first blocking error. Substitution errors yield failed(0) with zero
/// step outcomes.
ExecutionReport execute_grounded(BrowserBackend& backend, const Skill& skill,
                                 const std::map<std::string, ScalarValue>& args);

/// Keeps a skill iff its first element-bearing step resolves on the page;
/// skills with no element refs are always kept. Order-preserving.
std::vector<Skill> filter_by_presence(const std::vector<Skill>& skills, const PageSnapshot& page,
                                      const MatchWeights& weights = {});

/// Validation argument synthesis: str -> "test", int -> 1, float -> 1.0,
/// bool -> true, unless the spec carries a default.
std::map<std::string, ScalarValue> synthesize_default_args(const Skill& skill);

} // namespace skillkit
