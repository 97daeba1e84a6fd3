#pragma once

#include <string>
#include <vector>

#include "jsonx.hpp"
#include "skill.hpp"

namespace skillkit {

/// Grounded-mode tool registration: one callable tool per skill, named with
/// the fg_ prefix so it cannot collide with primitive browser actions.
struct ToolDescriptor {
    std::string tool_name;   // "fg_" + skill name
    std::string description; // description + Action Steps + Parameters blocks
    ojson parameters_schema; // JSON-schema object built from the parameter specs
};

/// Builds descriptors for a retrieval result. `include_guidance=false` omits
/// the Action Steps block (the step-guidance ablation). Throws on duplicate
/// skill names.
std::vector<ToolDescriptor> register_tools(const std::vector<Skill>& skills,
                                           bool include_guidance = true);

/// Full text block for one tool ("Tool name: ..." / "Description: ...").
std::string render_tool_descriptor(const ToolDescriptor& tool);

/// The <available_skills> listing injected each step in guided mode.
std::string render_available_skills(const std::vector<Skill>& skills);

/// The <activated_skill_guidance> block for one activated skill. Placeholders
/// stay in {{x}} form.
std::string render_activated_guidance(const Skill& skill);

/// Static prompt texts for the two modes.
std::string grounded_action_rules();
std::string guided_system_prompt();

enum class DeployMode { Grounded, Guided, Mix };

DeployMode deploy_mode_from_string(std::string_view name);
std::string_view to_string(DeployMode mode);

struct DeploymentSurface {
    std::vector<ToolDescriptor> tools;
    std::string tools_text;  // action rules + rendered tool blocks (grounded/mix)
    std::string blocks_text; // system prompt + available-skills block (guided/mix)
};

DeploymentSurface deployment_surface(DeployMode mode, const std::vector<Skill>& skills,
                                     bool include_guidance = true);

} // namespace skillkit
