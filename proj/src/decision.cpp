#include "decision.hpp"

#include "errors.hpp"
#include "jsonx.hpp"

namespace skillkit {

std::string_view to_string(DecisionAction action) {
    switch (action) {
    case DecisionAction::New: return "new";
    case DecisionAction::Skip: return "skip";
    case DecisionAction::Update: return "update";
    }
    return "skip";
}

namespace {

/// Extracts the first balanced top-level JSON object from free-form text.
std::optional<std::string> first_json_object(const std::string& text) {
    std::size_t start = text.find('{');
    if (start == std::string::npos) return std::nullopt;
    int depth = 0;
    bool in_string = false;
    bool escaped = false;
    for (std::size_t i = start; i < text.size(); ++i) {
        char c = text[i];
        if (in_string) {
            if (escaped) escaped = false;
            else if (c == '\\') escaped = true;
            else if (c == '"') in_string = false;
            continue;
        }
        if (c == '"') in_string = true;
        else if (c == '{') ++depth;
        else if (c == '}') {
            if (--depth == 0) return text.substr(start, i - start + 1);
        }
    }
    return std::nullopt;
}

std::optional<ExtractionDecision> parse_one_decision(const ojson& obj,
                                                     const DecisionParseOptions& options,
                                                     std::string& diagnostic) {
    if (!obj.is_object()) {
        diagnostic = "decision must be an object";
        return std::nullopt;
    }
    auto action_it = obj.find("action");
    if (action_it == obj.end() || !action_it->is_string()) {
        diagnostic = "decision missing 'action'";
        return std::nullopt;
    }
    std::string action = action_it->get<std::string>();

    ExtractionDecision decision;
    if (auto it = obj.find("existing_id"); it != obj.end() && it->is_string())
        decision.existing_id = it->get<std::string>();
    if (auto it = obj.find("reason"); it != obj.end() && it->is_string())
        decision.reason = it->get<std::string>();

    auto parse_decision_skill = [&](const ojson& record) -> bool {
        try {
            Skill skill = parse_skill(record);
            if (options.extraction_constraints) {
                auto steps = skill.action_steps.size();
                if (steps < static_cast<std::size_t>(options.step_threshold) ||
                    steps > static_cast<std::size_t>(options.max_steps)) {
                    diagnostic = "skill '" + skill.name + "': step count out of range (" +
                                 std::to_string(steps) + " not in [" +
                                 std::to_string(options.step_threshold) + ", " +
                                 std::to_string(options.max_steps) + "])";
                    return false;
                }
                if (skill.meta_url.find('?') != std::string::npos ||
                    skill.meta_url.find('#') != std::string::npos ||
                    skill.meta_url.find("://") != std::string::npos) {
                    diagnostic = "skill '" + skill.name +
                                 "': meta_url is not a generalized URL pattern: '" +
                                 skill.meta_url + "'";
                    return false;
                }
            }
            decision.skill = std::move(skill);
            return true;
        } catch (const SchemaError& e) {
            diagnostic = std::string("invalid skill: ") + e.what();
            return false;
        }
    };

    if (action == "new") {
        decision.action = DecisionAction::New;
        auto skill_it = obj.find("skill");
        if (skill_it == obj.end()) {
            diagnostic = "'new' decision missing 'skill'";
            return std::nullopt;
        }
        if (decision.existing_id) {
            diagnostic = "'new' decision must not carry existing_id";
            return std::nullopt;
        }
        if (!parse_decision_skill(*skill_it)) return std::nullopt;
    } else if (action == "skip") {
        decision.action = DecisionAction::Skip;
        if (!decision.existing_id) {
            diagnostic = "'skip' decision missing 'existing_id'";
            return std::nullopt;
        }
        if (decision.reason.empty()) {
            diagnostic = "'skip' decision missing 'reason'";
            return std::nullopt;
        }
    } else if (action == "update") {
        decision.action = DecisionAction::Update;
        if (!decision.existing_id) {
            diagnostic = "'update' decision missing 'existing_id'";
            return std::nullopt;
        }
        auto skill_it = obj.find("skill");
        if (skill_it == obj.end()) {
            diagnostic = "'update' decision missing 'skill'";
            return std::nullopt;
        }
        if (!parse_decision_skill(*skill_it)) return std::nullopt;
    } else {
        diagnostic = "unknown decision action '" + action + "'";
        return std::nullopt;
    }
    return decision;
}

} // namespace

ParsedDecisions parse_extraction_response(const std::string& text,
                                          const DecisionParseOptions& options) {
    auto object_text = first_json_object(text);
    if (!object_text) throw SchemaError("", "no JSON object found in extraction response");
    ojson envelope = ojson::parse(*object_text, nullptr, false);
    if (envelope.is_discarded())
        throw SchemaError("", "invalid JSON in extraction response");
    auto extractions = envelope.find("extractions");
    if (extractions == envelope.end() || !extractions->is_array())
        throw SchemaError("extractions", "missing 'extractions' array");

    ParsedDecisions out;
    for (std::size_t i = 0; i < extractions->size(); ++i) {
        std::string diagnostic;
        auto decision = parse_one_decision((*extractions)[i], options, diagnostic);
        if (decision) out.decisions.push_back(std::move(*decision));
        else out.diagnostics.push_back("extractions[" + std::to_string(i) + "]: " + diagnostic);
    }
    return out;
}

} // namespace skillkit
