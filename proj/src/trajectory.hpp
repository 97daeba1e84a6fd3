#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jsonx.hpp"
#include "skill.hpp"

namespace skillkit {

/// One recorded agent action. Unlike skill steps, the action type is an open
/// string: read-only extras from the recording agent are tolerated on ingest.
struct TrajAction {
    std::string action_type;
    std::optional<ElementRef> element;
    std::vector<std::pair<std::string, ScalarValue>> params;
};

struct TrajStep {
    std::string url;
    std::string thinking;
    std::string next_goal;
    std::vector<TrajAction> actions;
};

/// A recorded task attempt: the raw material for skill extraction.
struct Trajectory {
    std::string task;
    std::optional<bool> success;
    std::vector<TrajStep> steps; // non-empty
};

Trajectory parse_trajectory(const ojson& record);

/// Line-delimited JSON, one trajectory per line. Blank lines are skipped.
std::vector<Trajectory> parse_trajectory_corpus(const std::string& text);
std::vector<Trajectory> load_trajectory_corpus(const std::string& path);

/// Deterministic textual rendering used inside the extraction prompt.
std::string format_trajectory(const Trajectory& trajectory);

} // namespace skillkit
