#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jsonx.hpp"
#include "scalar.hpp"

namespace skillkit {

// ---------------------------------------------------------------------------
// Action types

enum class ActionType { Click, Input, SelectDropdown, Scroll, SendKeys, Navigate, Wait };

std::string_view to_string(ActionType type);
ActionType action_type_from_string(std::string_view name, const std::string& path);
bool try_action_type_from_string(std::string_view name, ActionType& out);

/// True for actions that must carry an element_ref; false means the ref is
/// forbidden.
bool action_requires_element(ActionType type);

/// Allowed param keys for an action type (empty for click).
const std::vector<std::string>& allowed_param_keys(ActionType type);

/// True for state-mutating ("write") action types: click, input,
/// select_dropdown, send_keys, navigate.
bool is_interactive(ActionType type);

// ---------------------------------------------------------------------------
// Parameter types

enum class ParamType { Str, Int, Float, Bool };

std::string_view to_string(ParamType type);
ParamType param_type_from_string(std::string_view name, const std::string& path);

// ---------------------------------------------------------------------------
// Domain types

struct ElementRef {
    std::string tag_name; // lowercase
    std::optional<std::string> text_content;
    std::vector<std::pair<std::string, std::string>> attributes; // lowercase keys, source order

    std::optional<std::string> attr(std::string_view key) const;
    bool operator==(const ElementRef&) const = default;
};

struct ParameterSpec {
    std::string name;
    ParamType type = ParamType::Str;
    std::string description;
    bool required = true;
    std::optional<ScalarValue> default_value;

    bool operator==(const ParameterSpec&) const = default;
};

struct ActionStep {
    std::string guidance; // non-empty
    ActionType action_type = ActionType::Click;
    std::optional<ElementRef> element_ref;
    std::vector<std::pair<std::string, ScalarValue>> params; // source order

    const ScalarValue* param(std::string_view key) const;
    bool operator==(const ActionStep&) const = default;
};

struct Skill {
    std::string name; // snake_case
    std::string description;
    std::optional<std::string> start_url;
    std::string meta_url;
    std::optional<std::string> category;
    std::vector<ParameterSpec> parameters;
    std::vector<ActionStep> action_steps; // non-empty
    std::vector<std::pair<std::string, ojson>> extra_fields; // preserved unknown fields

    const ParameterSpec* parameter(std::string_view name) const;
    bool operator==(const Skill&) const = default;
};

// ---------------------------------------------------------------------------
// Operations

/// Parses and validates one skill record. Throws SchemaError naming the first
/// violated rule and its path.
Skill parse_skill(const ojson& record);
Skill parse_skill(const std::string& text);

/// Canonical serialization (field order fixed; unknown fields re-emitted last).
ojson skill_to_json(const Skill& skill);
std::string serialize_skill(const Skill& skill);

/// Library file format: {"version": 1, "skills": [...]}.
std::vector<Skill> parse_library_document(const std::string& text);
std::string serialize_library_document(const std::vector<Skill>& skills);

/// All `{{name}}` placeholders appearing in a string, in order.
std::vector<std::string> find_placeholders(std::string_view text);

/// Substitutes {{x}} placeholders in step param values with stringified
/// argument (or default) values. Guidance and element refs are untouched.
/// Throws SubstitutionError.
std::vector<ActionStep> substitute_params(const Skill& skill,
                                          const std::map<std::string, ScalarValue>& args);

/// Substitution applied to a bare step list (same rules as substitute_params).
std::vector<ActionStep> substitute_steps(const std::vector<ActionStep>& steps,
                                         const std::vector<ParameterSpec>& specs,
                                         const std::map<std::string, ScalarValue>& args);

/// Number of interactive (write) steps: click, input, select_dropdown,
/// send_keys, navigate. Scroll and wait are read-only.
std::size_t interactive_op_count(const Skill& skill);

} // namespace skillkit
