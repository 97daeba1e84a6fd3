#include "trajectory.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "errors.hpp"
#include "html.hpp"

namespace skillkit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

ElementRef parse_traj_element(const ojson& obj, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "element must be an object");
    ElementRef ref;
    auto tag = obj.find("tag_name");
    if (tag == obj.end() || !tag->is_string() || tag->get<std::string>().empty())
        throw SchemaError(path, "missing element tag_name");
    ref.tag_name = lower(tag->get<std::string>());
    if (auto it = obj.find("text_content"); it != obj.end() && it->is_string()) {
        std::string text = it->get<std::string>();
        if (!text.empty()) ref.text_content = std::move(text);
    }
    if (auto it = obj.find("attributes"); it != obj.end() && it->is_object()) {
        for (const auto& [key, value] : it->items()) {
            std::string text = value.is_string()
                                   ? value.get<std::string>()
                                   : ScalarValue::from_json(value, path + ".attributes." + key)
                                         .to_text();
            ref.attributes.emplace_back(lower(key), std::move(text));
        }
    }
    return ref;
}

} // namespace

Trajectory parse_trajectory(const ojson& record) {
    if (!record.is_object()) throw SchemaError("", "trajectory must be a JSON object");
    Trajectory out;
    auto task = record.find("task");
    if (task == record.end() || !task->is_string())
        throw SchemaError("task", "missing required field 'task'");
    out.task = task->get<std::string>();
    if (auto it = record.find("success"); it != record.end() && !it->is_null()) {
        if (!it->is_boolean()) throw SchemaError("success", "expected a bool");
        out.success = it->get<bool>();
    }
    auto steps = record.find("steps");
    if (steps == record.end() || !steps->is_array() || steps->empty())
        throw SchemaError("steps", "trajectory steps must be a non-empty array");
    for (std::size_t i = 0; i < steps->size(); ++i) {
        const ojson& step_obj = (*steps)[i];
        std::string path = "steps[" + std::to_string(i) + "]";
        if (!step_obj.is_object()) throw SchemaError(path, "step must be an object");
        TrajStep step;
        if (auto it = step_obj.find("url"); it != step_obj.end() && it->is_string())
            step.url = it->get<std::string>();
        if (auto it = step_obj.find("thinking"); it != step_obj.end() && it->is_string())
            step.thinking = it->get<std::string>();
        if (auto it = step_obj.find("next_goal"); it != step_obj.end() && it->is_string())
            step.next_goal = it->get<std::string>();
        if (auto it = step_obj.find("actions"); it != step_obj.end() && it->is_array()) {
            for (std::size_t j = 0; j < it->size(); ++j) {
                const ojson& action_obj = (*it)[j];
                std::string apath = path + ".actions[" + std::to_string(j) + "]";
                if (!action_obj.is_object()) throw SchemaError(apath, "action must be an object");
                TrajAction action;
                auto type = action_obj.find("action_type");
                if (type == action_obj.end() || !type->is_string() ||
                    type->get<std::string>().empty())
                    throw SchemaError(apath, "missing action_type");
                action.action_type = type->get<std::string>();
                if (auto el = action_obj.find("element"); el != action_obj.end() && el->is_object())
                    action.element = parse_traj_element(*el, apath + ".element");
                if (auto params = action_obj.find("params");
                    params != action_obj.end() && params->is_object()) {
                    for (const auto& [key, value] : params->items())
                        action.params.emplace_back(
                            key, ScalarValue::from_json(value, apath + ".params." + key));
                }
                step.actions.push_back(std::move(action));
            }
        }
        out.steps.push_back(std::move(step));
    }
    return out;
}

std::vector<Trajectory> parse_trajectory_corpus(const std::string& text) {
    std::vector<Trajectory> out;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        ojson record = ojson::parse(line, nullptr, false);
        if (record.is_discarded())
            throw SchemaError("line " + std::to_string(line_no), "invalid JSON");
        out.push_back(parse_trajectory(record));
    }
    return out;
}

std::vector<Trajectory> load_trajectory_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read corpus: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_trajectory_corpus(buffer.str());
}

std::string format_trajectory(const Trajectory& trajectory) {
    std::string out = "Task: " + collapse_whitespace(trajectory.task) + "\n";
    if (trajectory.success)
        out += std::string("Outcome: ") + (*trajectory.success ? "success" : "failure") + "\n";
    for (std::size_t i = 0; i < trajectory.steps.size(); ++i) {
        const TrajStep& step = trajectory.steps[i];
        out += "Step " + std::to_string(i + 1) + " | URL: " + collapse_whitespace(step.url);
        if (!step.thinking.empty()) out += " | Thinking: " + collapse_whitespace(step.thinking);
        if (!step.next_goal.empty()) out += " | Goal: " + collapse_whitespace(step.next_goal);
        out += "\n";
        for (const auto& action : step.actions) {
            out += "- " + action.action_type;
            if (action.element) {
                out += " " + action.element->tag_name;
                if (action.element->text_content)
                    out += " '" + collapse_whitespace(*action.element->text_content) + "'";
                if (!action.element->attributes.empty()) {
                    out += " {";
                    bool first = true;
                    for (const auto& [key, value] : action.element->attributes) {
                        if (!first) out += ", ";
                        out += key + "=" + value;
                        first = false;
                    }
                    out += "}";
                }
            }
            out += " params={";
            bool first = true;
            for (const auto& [key, value] : action.params) {
                if (!first) out += ", ";
                out += key + "=" + value.to_text();
                first = false;
            }
            out += "}\n";
        }
    }
    return out;
}

} // namespace skillkit
