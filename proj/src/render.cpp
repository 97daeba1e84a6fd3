#include "render.hpp"

#include <set>

#include "errors.hpp"
#include "html.hpp"

namespace skillkit {

namespace {

// Attribute priorities for the compact element descriptors shown in step
// renderings. At most two descriptors are shown per element; guided mode
// leads with visible text, grounded mode with the id.
const std::vector<std::string> kGroundedAttrOrder = {"id",         "placeholder", "type",
                                                     "aria-label", "href",        "class"};
const std::vector<std::string> kGuidedAttrOrder = {"placeholder", "id",   "type",
                                                   "aria-label",  "href"};
constexpr std::size_t kMaxElementDescriptors = 2;

std::string quoted(const std::string& value) { return "\"" + value + "\""; }

std::string element_grounded(const ElementRef& ref) {
    std::string out = "<" + ref.tag_name;
    std::size_t shown = 0;
    for (const auto& key : kGroundedAttrOrder) {
        if (shown >= kMaxElementDescriptors) break;
        if (auto value = ref.attr(key)) {
            out += " " + key + "=" + quoted(*value);
            ++shown;
        }
    }
    return out + ">";
}

std::string element_guided(const ElementRef& ref) {
    std::string out = "<" + ref.tag_name + ">";
    std::size_t shown = 0;
    if (ref.text_content) {
        out += " text=" + quoted(collapse_whitespace(*ref.text_content));
        ++shown;
    }
    for (const auto& key : kGuidedAttrOrder) {
        if (shown >= kMaxElementDescriptors) break;
        if (auto value = ref.attr(key)) {
            out += " " + key + "=" + quoted(*value);
            ++shown;
        }
    }
    return out;
}

std::string param_text(const ActionStep& step, std::string_view key) {
    const ScalarValue* value = step.param(key);
    return value ? value->to_text() : std::string{};
}

// Display keys per action type for the grounded arrow rendering; auxiliary
// flags (clear, new_tab) are not shown.
std::string grounded_params(const ActionStep& step) {
    auto kv = [&](const char* key) -> std::string {
        const ScalarValue* value = step.param(key);
        return value ? std::string(key) + "=" + quoted(value->to_text()) : std::string{};
    };
    std::vector<std::string> parts;
    switch (step.action_type) {
    case ActionType::Input: parts = {kv("text")}; break;
    case ActionType::SelectDropdown: parts = {kv("text")}; break;
    case ActionType::Scroll: parts = {kv("direction"), kv("pages")}; break;
    case ActionType::SendKeys: parts = {kv("keys")}; break;
    case ActionType::Navigate: parts = {kv("url")}; break;
    case ActionType::Wait: parts = {kv("seconds")}; break;
    case ActionType::Click: break;
    }
    std::string out;
    for (const auto& part : parts) {
        if (part.empty()) continue;
        out += out.empty() ? part : ", " + part;
    }
    return out;
}

std::string action_grounded(const ActionStep& step) {
    std::string out(to_string(step.action_type));
    if (step.element_ref) out += " " + element_grounded(*step.element_ref);
    std::string params = grounded_params(step);
    if (!params.empty()) out += (step.element_ref ? " with " : " ") + params;
    return out;
}

std::string action_guided(const ActionStep& step) {
    switch (step.action_type) {
    case ActionType::Click:
        return "click on " + element_guided(*step.element_ref);
    case ActionType::Input:
        return "input " + quoted(param_text(step, "text")) + " into " +
               element_guided(*step.element_ref);
    case ActionType::SelectDropdown:
        return "select " + quoted(param_text(step, "text")) + " in " +
               element_guided(*step.element_ref);
    case ActionType::Scroll: {
        std::string out = "scroll";
        if (auto* direction = step.param("direction")) out += " " + direction->to_text();
        if (auto* pages = step.param("pages")) out += " (" + pages->to_text() + " pages)";
        return out;
    }
    case ActionType::SendKeys:
        return "press keys " + quoted(param_text(step, "keys"));
    case ActionType::Navigate:
        return "navigate to " + quoted(param_text(step, "url"));
    case ActionType::Wait:
        return "wait " + (step.param("seconds") ? step.param("seconds")->to_text() : "1") +
               " seconds";
    }
    return std::string(to_string(step.action_type));
}

const char* json_schema_type(ParamType type) {
    switch (type) {
    case ParamType::Str: return "string";
    case ParamType::Int: return "integer";
    case ParamType::Float: return "number";
    case ParamType::Bool: return "boolean";
    }
    return "string";
}

std::string parameter_line(const ParameterSpec& spec) {
    std::string flags = spec.required ? "required" : "optional";
    if (spec.default_value) flags += ", default: " + spec.default_value->to_text();
    return "  - " + spec.name + ": " + std::string(to_string(spec.type)) + " (" + flags + ") - " +
           collapse_whitespace(spec.description);
}

} // namespace

std::vector<ToolDescriptor> register_tools(const std::vector<Skill>& skills,
                                           bool include_guidance) {
    std::set<std::string> seen;
    std::vector<ToolDescriptor> out;
    for (const auto& skill : skills) {
        if (!seen.insert(skill.name).second)
            throw SchemaError("", "duplicate skill name '" + skill.name + "'");

        ToolDescriptor tool;
        tool.tool_name = "fg_" + skill.name;

        std::string text = collapse_whitespace(skill.description) + "\n";
        if (include_guidance) {
            text += "\nAction Steps:\n";
            for (std::size_t i = 0; i < skill.action_steps.size(); ++i) {
                const ActionStep& step = skill.action_steps[i];
                text += "  Step " + std::to_string(i + 1) + ": " +
                        collapse_whitespace(step.guidance) + " -> " + action_grounded(step) +
                        "\n";
            }
        }
        text += "\nParameters (pass as kwargs_json):\n";
        if (skill.parameters.empty()) {
            text += "  (none)\n";
        } else {
            for (const auto& spec : skill.parameters) text += parameter_line(spec) + "\n";
        }
        tool.description = std::move(text);

        ojson schema;
        schema["type"] = "object";
        schema["properties"] = ojson::object();
        ojson required = ojson::array();
        for (const auto& spec : skill.parameters) {
            ojson prop;
            prop["type"] = json_schema_type(spec.type);
            prop["description"] = spec.description;
            if (spec.default_value) prop["default"] = spec.default_value->to_json();
            schema["properties"][spec.name] = std::move(prop);
            if (spec.required) required.push_back(spec.name);
        }
        schema["required"] = std::move(required);
        tool.parameters_schema = std::move(schema);
        out.push_back(std::move(tool));
    }
    return out;
}

std::string render_tool_descriptor(const ToolDescriptor& tool) {
    return "Tool name: " + tool.tool_name + "\nDescription: " + tool.description;
}

std::string render_available_skills(const std::vector<Skill>& skills) {
    std::string out = "<available_skills>\n"
                      "Skills are pre-defined step-by-step workflow guides.\n"
                      "Call use_skill(skill_name=\"...\") to activate a skill.\n"
                      "Call clear_skill() when finished.\n";
    if (!skills.empty()) {
        out += "\n";
        for (std::size_t i = 0; i < skills.size(); ++i) {
            out += std::to_string(i + 1) + ". " + skills[i].name + ": " +
                   collapse_whitespace(skills[i].description) + "\n";
        }
    }
    out += "</available_skills>\n";
    return out;
}

std::string render_activated_guidance(const Skill& skill) {
    std::string out = "<activated_skill_guidance>\n";
    out += "Skill: \"" + skill.name + "\"\n";
    out += "Description: " + collapse_whitespace(skill.description) + "\n";
    out += "\nFollow these steps using your browser actions:\n\n";
    for (std::size_t i = 0; i < skill.action_steps.size(); ++i) {
        const ActionStep& step = skill.action_steps[i];
        out += "Step " + std::to_string(i + 1) + ": " + collapse_whitespace(step.guidance) + "\n";
        out += "  Example: " + action_guided(step) + "\n";
    }
    out += "\nIMPORTANT:\n"
           "- Use native browser actions to execute each step\n"
           "- If a step fails, adapt and continue\n"
           "- Call clear_skill() when finished\n"
           "</activated_skill_guidance>\n";
    return out;
}

std::string grounded_action_rules() {
    return "<action_rules>\n"
           "- In some pages, you are equipped with pre-built skills (fg_*). Each skill is a "
           "sequence of low-level actions (click, input, scroll, wait, etc.) that will be "
           "sequentially executed when you call the skill.\n"
           "- Prefer fg_* skills when they match your current goal because they are efficient "
           "and well-tested.\n"
           "- If an fg_* skill fails or does not meet your expectations, do not repeat the same "
           "failing fg_* call; continue using native browser actions to achieve your goal.\n"
           "</action_rules>\n";
}

std::string guided_system_prompt() {
    return "## SKILL MODE\n"
           "\n"
           "You have access to a library of Skills -- pre-defined step-by-step workflow guides "
           "for common tasks on web pages.\n"
           "\n"
           "### How Skills Work:\n"
           "- Each step, you'll see <available_skills> listing skills\n"
           "- Call use_skill(skill_name=\"...\") to activate a skill\n"
           "- On your NEXT step, <activated_skill_guidance> will appear with detailed "
           "step-by-step instructions\n"
           "- Follow the guidance using your normal browser actions\n"
           "- Skills are guides, not automatic executors -- YOU perform each step\n"
           "- Call clear_skill() when finished\n"
           "\n"
           "### When to Use Skills:\n"
           "- When an available skill matches your current sub-goal\n"
           "- Skills save you from figuring out the UI workflow\n"
           "\n"
           "### When NOT to Use Skills:\n"
           "- When no skill matches your goal\n"
           "- When the task is simple enough\n"
           "\n"
           "### After Activating a Skill:\n"
           "1. Read the step-by-step guidance carefully\n"
           "2. Observe the page to identify the elements described\n"
           "3. Execute each step using your browser actions\n"
           "4. If a step fails, adapt and continue\n"
           "5. Call clear_skill() when done\n"
           "6. IMPORTANT: skill is a general guide, not a strict script; use your judgment to "
           "adapt as needed.\n";
}

DeployMode deploy_mode_from_string(std::string_view name) {
    if (name == "grounded") return DeployMode::Grounded;
    if (name == "guided") return DeployMode::Guided;
    if (name == "mix") return DeployMode::Mix;
    throw ConfigError("unknown deployment mode '" + std::string(name) +
                      "' (expected grounded, guided, or mix)");
}

std::string_view to_string(DeployMode mode) {
    switch (mode) {
    case DeployMode::Grounded: return "grounded";
    case DeployMode::Guided: return "guided";
    case DeployMode::Mix: return "mix";
    }
    return "grounded";
}

DeploymentSurface deployment_surface(DeployMode mode, const std::vector<Skill>& skills,
                                     bool include_guidance) {
    DeploymentSurface surface;
    if (mode == DeployMode::Grounded || mode == DeployMode::Mix) {
        surface.tools = register_tools(skills, include_guidance);
        std::string text = grounded_action_rules();
        for (const auto& tool : surface.tools) text += "\n" + render_tool_descriptor(tool);
        surface.tools_text = std::move(text);
    }
    if (mode == DeployMode::Guided || mode == DeployMode::Mix) {
        surface.blocks_text = guided_system_prompt() + "\n" + render_available_skills(skills);
    }
    return surface;
}

} // namespace skillkit
