#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skill.hpp"

namespace skillkit {

enum class DecisionAction { New, Skip, Update };

std::string_view to_string(DecisionAction action);

/// One curation decision from the extraction model: add a new skill, skip a
/// redundant candidate, or replace an existing entry with an updated version.
struct ExtractionDecision {
    DecisionAction action = DecisionAction::Skip;
    std::optional<Skill> skill;            // new/update
    std::optional<std::string> existing_id; // skip/update
    std::string reason;
};

struct ParsedDecisions {
    std::vector<ExtractionDecision> decisions;
    std::vector<std::string> diagnostics; // one entry per dropped decision
};

struct DecisionParseOptions {
    /// Extraction-layer gates: step count within [step_threshold, max_steps]
    /// and a generalized meta_url. Off for standalone (library-layer)
    /// decision application, which only requires schema-valid skills.
    bool extraction_constraints = true;
    int step_threshold = 2;
    int max_steps = 6;
};

/// Tolerant response parsing: strips code fences / surrounding prose by
/// locating the first balanced top-level JSON object, then validates each
/// decision. Invalid decisions are dropped with diagnostics; an unparseable
/// envelope throws SchemaError.
ParsedDecisions parse_extraction_response(const std::string& text,
                                          const DecisionParseOptions& options = {});

} // namespace skillkit
