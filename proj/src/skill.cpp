#include "skill.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "errors.hpp"

namespace skillkit {

namespace {

const std::array<std::string_view, 7> kActionNames = {
    "click", "input", "select_dropdown", "scroll", "send_keys", "navigate", "wait"};

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_snake_case(std::string_view s) {
    if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    });
}

bool is_identifier(std::string_view s) {
    if (s.empty()) return false;
    auto head = [](char c) { return c == '_' || std::isalpha(static_cast<unsigned char>(c)); };
    auto tail = [&](char c) { return head(c) || std::isdigit(static_cast<unsigned char>(c)); };
    if (!head(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), tail);
}

std::string require_string(const ojson& obj, const char* key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null())
        throw SchemaError(path, std::string("missing required field '") + key + "'");
    if (!it->is_string())
        throw SchemaError(path + "." + key, "expected a string");
    return it->get<std::string>();
}

std::optional<std::string> optional_string(const ojson& obj, const char* key,
                                           const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (!it->is_string())
        throw SchemaError(path + "." + key, "expected a string");
    return it->get<std::string>();
}

} // namespace

// ---------------------------------------------------------------------------
// Action types

std::string_view to_string(ActionType type) {
    return kActionNames[static_cast<std::size_t>(type)];
}

bool try_action_type_from_string(std::string_view name, ActionType& out) {
    for (std::size_t i = 0; i < kActionNames.size(); ++i) {
        if (kActionNames[i] == name) {
            out = static_cast<ActionType>(i);
            return true;
        }
    }
    return false;
}

ActionType action_type_from_string(std::string_view name, const std::string& path) {
    ActionType type;
    if (!try_action_type_from_string(name, type))
        throw SchemaError(path, "unknown action_type '" + std::string(name) + "'");
    return type;
}

bool action_requires_element(ActionType type) {
    switch (type) {
    case ActionType::Click:
    case ActionType::Input:
    case ActionType::SelectDropdown:
        return true;
    default:
        return false;
    }
}

const std::vector<std::string>& allowed_param_keys(ActionType type) {
    static const std::vector<std::string> kClick = {};
    static const std::vector<std::string> kInput = {"text", "clear"};
    static const std::vector<std::string> kSelect = {"text"};
    static const std::vector<std::string> kScroll = {"direction", "pages"};
    static const std::vector<std::string> kSendKeys = {"keys"};
    static const std::vector<std::string> kNavigate = {"url", "new_tab"};
    static const std::vector<std::string> kWait = {"seconds"};
    switch (type) {
    case ActionType::Click: return kClick;
    case ActionType::Input: return kInput;
    case ActionType::SelectDropdown: return kSelect;
    case ActionType::Scroll: return kScroll;
    case ActionType::SendKeys: return kSendKeys;
    case ActionType::Navigate: return kNavigate;
    case ActionType::Wait: return kWait;
    }
    return kClick;
}

bool is_interactive(ActionType type) {
    switch (type) {
    case ActionType::Click:
    case ActionType::Input:
    case ActionType::SelectDropdown:
    case ActionType::SendKeys:
    case ActionType::Navigate:
        return true;
    case ActionType::Scroll:
    case ActionType::Wait:
        return false;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parameter types

std::string_view to_string(ParamType type) {
    switch (type) {
    case ParamType::Str: return "str";
    case ParamType::Int: return "int";
    case ParamType::Float: return "float";
    case ParamType::Bool: return "bool";
    }
    return "str";
}

ParamType param_type_from_string(std::string_view name, const std::string& path) {
    if (name == "str") return ParamType::Str;
    if (name == "int") return ParamType::Int;
    if (name == "float") return ParamType::Float;
    if (name == "bool") return ParamType::Bool;
    throw SchemaError(path, "unknown parameter type '" + std::string(name) + "'");
}

namespace {

bool scalar_matches_type(const ScalarValue& v, ParamType type) {
    switch (type) {
    case ParamType::Str: return v.is_string();
    case ParamType::Int: return v.is_int();
    case ParamType::Float: return v.is_int() || v.is_float();
    case ParamType::Bool: return v.is_bool();
    }
    return false;
}

} // namespace

// ---------------------------------------------------------------------------
// Field lookups

std::optional<std::string> ElementRef::attr(std::string_view key) const {
    for (const auto& [k, v] : attributes)
        if (k == key) return v;
    return std::nullopt;
}

const ScalarValue* ActionStep::param(std::string_view key) const {
    for (const auto& [k, v] : params)
        if (k == key) return &v;
    return nullptr;
}

const ParameterSpec* Skill::parameter(std::string_view name) const {
    for (const auto& p : parameters)
        if (p.name == name) return &p;
    return nullptr;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

ElementRef parse_element_ref(const ojson& obj, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "element_ref must be an object");
    ElementRef ref;
    ref.tag_name = lower(require_string(obj, "tag_name", path));
    if (ref.tag_name.empty()) throw SchemaError(path + ".tag_name", "tag_name must be non-empty");
    auto text = optional_string(obj, "text_content", path);
    if (text && !text->empty()) ref.text_content = std::move(text);
    if (auto it = obj.find("attributes"); it != obj.end() && !it->is_null()) {
        if (!it->is_object()) throw SchemaError(path + ".attributes", "expected an object");
        for (const auto& [key, value] : it->items()) {
            std::string attr_path = path + ".attributes." + key;
            std::string text_value = value.is_string()
                                         ? value.get<std::string>()
                                         : ScalarValue::from_json(value, attr_path).to_text();
            ref.attributes.emplace_back(lower(key), std::move(text_value));
        }
    }
    for (const auto& [key, _] : obj.items()) {
        if (key != "tag_name" && key != "text_content" && key != "attributes")
            throw SchemaError(path + "." + key, "unknown element_ref field");
    }
    return ref;
}

ParameterSpec parse_parameter_spec(const ojson& obj, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "parameter must be an object");
    ParameterSpec spec;
    spec.name = require_string(obj, "name", path);
    if (!is_identifier(spec.name))
        throw SchemaError(path + ".name", "invalid parameter name '" + spec.name + "'");
    spec.type = param_type_from_string(require_string(obj, "type", path), path + ".type");
    spec.description = optional_string(obj, "description", path).value_or("");
    if (auto it = obj.find("required"); it != obj.end() && !it->is_null()) {
        if (!it->is_boolean()) throw SchemaError(path + ".required", "expected a bool");
        spec.required = it->get<bool>();
    }
    if (auto it = obj.find("default"); it != obj.end() && !it->is_null()) {
        spec.default_value = ScalarValue::from_json(*it, path + ".default");
        if (!scalar_matches_type(*spec.default_value, spec.type))
            throw SchemaError(path + ".default",
                              "default does not match declared type '" +
                                  std::string(to_string(spec.type)) + "'");
    }
    return spec;
}

ActionStep parse_action_step(const ojson& obj, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "action step must be an object");
    ActionStep step;
    step.guidance = require_string(obj, "guidance", path);
    if (step.guidance.empty()) throw SchemaError(path + ".guidance", "empty guidance");
    step.action_type =
        action_type_from_string(require_string(obj, "action_type", path), path + ".action_type");

    auto ref_it = obj.find("element_ref");
    bool has_ref = ref_it != obj.end() && !ref_it->is_null();
    if (action_requires_element(step.action_type)) {
        if (!has_ref)
            throw SchemaError(path, "element_ref missing (required for '" +
                                        std::string(to_string(step.action_type)) + "')");
        step.element_ref = parse_element_ref(*ref_it, path + ".element_ref");
    } else if (has_ref) {
        throw SchemaError(path + ".element_ref",
                          "element_ref not allowed for '" +
                              std::string(to_string(step.action_type)) + "'");
    }

    if (auto it = obj.find("params"); it != obj.end() && !it->is_null()) {
        if (!it->is_object()) throw SchemaError(path + ".params", "expected an object");
        const auto& allowed = allowed_param_keys(step.action_type);
        for (const auto& [key, value] : it->items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
                throw SchemaError(path + ".params." + key,
                                  "unexpected param for '" +
                                      std::string(to_string(step.action_type)) + "'");
            step.params.emplace_back(key,
                                     ScalarValue::from_json(value, path + ".params." + key));
        }
    }
    return step;
}

const std::set<std::string>& known_skill_fields() {
    static const std::set<std::string> kFields = {"name",     "description", "start_url",
                                                  "meta_url", "category",    "parameters",
                                                  "action_steps"};
    return kFields;
}

} // namespace

Skill parse_skill(const ojson& record) {
    if (!record.is_object()) throw SchemaError("", "skill record must be a JSON object");

    Skill skill;
    skill.name = require_string(record, "name", "");
    if (!is_snake_case(skill.name))
        throw SchemaError("name", "invalid skill name '" + skill.name +
                                      "' (must be snake_case: ^[a-z][a-z0-9_]*$)");
    skill.description = require_string(record, "description", "");
    skill.start_url = optional_string(record, "start_url", "");
    skill.meta_url = require_string(record, "meta_url", "");
    if (skill.meta_url.empty()) throw SchemaError("meta_url", "meta_url must be non-empty");
    skill.category = optional_string(record, "category", "");

    if (auto it = record.find("parameters"); it != record.end() && !it->is_null()) {
        if (!it->is_array()) throw SchemaError("parameters", "expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            auto spec = parse_parameter_spec((*it)[i], "parameters[" + std::to_string(i) + "]");
            if (skill.parameter(spec.name))
                throw SchemaError("parameters[" + std::to_string(i) + "].name",
                                  "duplicate parameter name '" + spec.name + "'");
            skill.parameters.push_back(std::move(spec));
        }
    }

    auto steps_it = record.find("action_steps");
    if (steps_it == record.end() || steps_it->is_null())
        throw SchemaError("", "missing required field 'action_steps'");
    if (!steps_it->is_array()) throw SchemaError("action_steps", "expected an array");
    if (steps_it->empty()) throw SchemaError("action_steps", "action_steps must be non-empty");
    for (std::size_t i = 0; i < steps_it->size(); ++i)
        skill.action_steps.push_back(
            parse_action_step((*steps_it)[i], "action_steps[" + std::to_string(i) + "]"));

    // Placeholder wiring: every placeholder housed, every parameter referenced.
    std::set<std::string> referenced;
    for (std::size_t i = 0; i < skill.action_steps.size(); ++i) {
        for (const auto& [key, value] : skill.action_steps[i].params) {
            if (!value.is_string()) continue;
            for (const auto& name : find_placeholders(value.as_string())) {
                if (!skill.parameter(name))
                    throw SchemaError("action_steps[" + std::to_string(i) + "].params." + key,
                                      "unhoused placeholder '" + name + "'");
                referenced.insert(name);
            }
        }
    }
    for (const auto& spec : skill.parameters) {
        if (!referenced.count(spec.name))
            throw SchemaError("parameters",
                              "orphan parameter '" + spec.name + "' (never referenced)");
    }

    for (const auto& [key, value] : record.items()) {
        if (!known_skill_fields().count(key)) skill.extra_fields.emplace_back(key, value);
    }
    return skill;
}

Skill parse_skill(const std::string& text) {
    ojson record = ojson::parse(text, nullptr, false);
    if (record.is_discarded()) throw SchemaError("", "invalid JSON");
    return parse_skill(record);
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

ojson element_ref_to_json(const ElementRef& ref) {
    ojson out;
    out["tag_name"] = ref.tag_name;
    if (ref.text_content) out["text_content"] = *ref.text_content;
    if (!ref.attributes.empty()) {
        ojson attrs;
        for (const auto& [k, v] : ref.attributes) attrs[k] = v;
        out["attributes"] = std::move(attrs);
    }
    return out;
}

} // namespace

ojson skill_to_json(const Skill& skill) {
    ojson out;
    out["name"] = skill.name;
    out["description"] = skill.description;
    if (skill.start_url) out["start_url"] = *skill.start_url;
    out["meta_url"] = skill.meta_url;
    if (skill.category) out["category"] = *skill.category;
    out["parameters"] = ojson::array();
    for (const auto& spec : skill.parameters) {
        ojson p;
        p["name"] = spec.name;
        p["type"] = std::string(to_string(spec.type));
        p["description"] = spec.description;
        p["required"] = spec.required;
        if (spec.default_value) p["default"] = spec.default_value->to_json();
        out["parameters"].push_back(std::move(p));
    }
    out["action_steps"] = ojson::array();
    for (const auto& step : skill.action_steps) {
        ojson s;
        s["guidance"] = step.guidance;
        s["action_type"] = std::string(to_string(step.action_type));
        if (step.element_ref) s["element_ref"] = element_ref_to_json(*step.element_ref);
        ojson params = ojson::object();
        for (const auto& [k, v] : step.params) params[k] = v.to_json();
        s["params"] = std::move(params);
        out["action_steps"].push_back(std::move(s));
    }
    for (const auto& [key, value] : skill.extra_fields) out[key] = value;
    return out;
}

std::string serialize_skill(const Skill& skill) { return skill_to_json(skill).dump(2); }

std::vector<Skill> parse_library_document(const std::string& text) {
    ojson doc = ojson::parse(text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw SchemaError("", "library document must be a JSON object");
    auto version = doc.find("version");
    if (version == doc.end() || !version->is_number_integer() ||
        version->get<long long>() != 1)
        throw SchemaError("version", "unsupported library version (expected 1)");
    auto skills = doc.find("skills");
    if (skills == doc.end() || !skills->is_array())
        throw SchemaError("skills", "missing 'skills' array");
    std::vector<Skill> out;
    out.reserve(skills->size());
    for (std::size_t i = 0; i < skills->size(); ++i) {
        try {
            out.push_back(parse_skill((*skills)[i]));
        } catch (const SchemaError& e) {
            throw SchemaError("skills[" + std::to_string(i) + "]" +
                                  (e.path().empty() ? "" : "." + e.path()),
                              e.what());
        }
    }
    return out;
}

std::string serialize_library_document(const std::vector<Skill>& skills) {
    ojson doc;
    doc["version"] = 1;
    doc["skills"] = ojson::array();
    for (const auto& skill : skills) doc["skills"].push_back(skill_to_json(skill));
    return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Substitution

std::vector<std::string> find_placeholders(std::string_view text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while ((pos = text.find("{{", pos)) != std::string_view::npos) {
        std::size_t end = text.find("}}", pos + 2);
        if (end == std::string_view::npos) break;
        std::string_view name = text.substr(pos + 2, end - pos - 2);
        if (is_identifier(name)) {
            out.emplace_back(name);
            pos = end + 2;
        } else {
            pos += 2;
        }
    }
    return out;
}

std::vector<ActionStep> substitute_steps(const std::vector<ActionStep>& steps,
                                         const std::vector<ParameterSpec>& specs,
                                         const std::map<std::string, ScalarValue>& args) {
    auto find_spec = [&](std::string_view name) -> const ParameterSpec* {
        for (const auto& s : specs)
            if (s.name == name) return &s;
        return nullptr;
    };

    for (const auto& [name, value] : args) {
        const ParameterSpec* spec = find_spec(name);
        if (!spec)
            throw SubstitutionError(SubstitutionError::Kind::UnknownParameter, name,
                                    "argument for unknown parameter name: " + name);
        if (!scalar_matches_type(value, spec->type))
            throw SubstitutionError(SubstitutionError::Kind::TypeMismatch, name,
                                    "type mismatch for parameter '" + name + "': expected " +
                                        std::string(to_string(spec->type)));
    }

    auto resolve = [&](const std::string& name) -> std::string {
        const ParameterSpec* spec = find_spec(name); // housed by validation
        auto it = args.find(name);
        if (it != args.end()) return it->second.to_text();
        if (spec && spec->default_value) return spec->default_value->to_text();
        if (spec && spec->required)
            throw SubstitutionError(SubstitutionError::Kind::MissingArgument, name,
                                    "missing required argument: " + name);
        throw SubstitutionError(SubstitutionError::Kind::MissingArgument, name,
                                "missing argument for parameter '" + name +
                                    "' (optional, no default)");
    };

    std::vector<ActionStep> out = steps;
    for (auto& step : out) {
        for (auto& [key, value] : step.params) {
            if (!value.is_string()) continue;
            const std::string& src = value.as_string();
            std::string result;
            std::size_t pos = 0;
            while (pos < src.size()) {
                std::size_t open = src.find("{{", pos);
                if (open == std::string::npos) {
                    result.append(src, pos, std::string::npos);
                    break;
                }
                std::size_t close = src.find("}}", open + 2);
                std::string name =
                    close == std::string::npos ? "" : src.substr(open + 2, close - open - 2);
                if (close == std::string::npos || !is_identifier(name)) {
                    result.append(src, pos, open + 2 - pos);
                    pos = open + 2;
                    continue;
                }
                result.append(src, pos, open - pos);
                result.append(resolve(name));
                pos = close + 2;
            }
            value = ScalarValue(std::move(result));
        }
    }
    return out;
}

std::vector<ActionStep> substitute_params(const Skill& skill,
                                          const std::map<std::string, ScalarValue>& args) {
    return substitute_steps(skill.action_steps, skill.parameters, args);
}

std::size_t interactive_op_count(const Skill& skill) {
    std::size_t n = 0;
    for (const auto& step : skill.action_steps)
        if (is_interactive(step.action_type)) ++n;
    return n;
}

} // namespace skillkit
