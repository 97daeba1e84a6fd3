#include "executor.hpp"

#include "errors.hpp"

namespace skillkit {

std::string_view to_string(ExecStatus status) {
    switch (status) {
    case ExecStatus::Success: return "success";
    case ExecStatus::Partial: return "partial";
    case ExecStatus::Failed: return "failed";
    }
    return "failed";
}

ojson ExecutionReport::to_json() const {
    ojson out;
    out["skill"] = skill;
    out["status"] = std::string(to_string(status));
    if (status != ExecStatus::Success) out["failed_step"] = failed_step;
    if (!error.empty()) out["error"] = error;
    out["steps"] = ojson::array();
    for (const auto& step : steps) {
        ojson s;
        s["index"] = step.index;
        s["ok"] = step.ok;
        if (!step.ok) {
            s["kind"] = step.kind;
            s["message"] = step.message;
        }
        out["steps"].push_back(std::move(s));
    }
    out["final_url"] = final_url;
    out["events"] = events;
    return out;
}

ExecutionReport execute_grounded(BrowserBackend& backend, const Skill& skill,
                                 const std::map<std::string, ScalarValue>& args) {
    ExecutionReport report;
    report.skill = skill.name;

    std::vector<ActionStep> steps;
    try {
        steps = substitute_params(skill, args);
    } catch (const SubstitutionError& e) {
        report.status = ExecStatus::Failed;
        report.failed_step = 0;
        report.error = e.what();
        report.final_url = backend.current_url();
        return report;
    }

    int first_error = -1;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        StepOutcome outcome = backend.apply(steps[i], static_cast<int>(i));
        StepReportEntry entry;
        entry.index = static_cast<int>(i);
        entry.ok = outcome.ok;
        entry.kind = outcome.kind;
        entry.message = outcome.message;
        report.steps.push_back(entry);
        if (!outcome.ok && first_error < 0) first_error = static_cast<int>(i);
        if (!outcome.ok && is_blocking_kind(outcome.kind)) break;
    }
    if (first_error < 0) {
        report.status = ExecStatus::Success;
    } else {
        report.failed_step = first_error;
        report.status = first_error == 0 ? ExecStatus::Failed : ExecStatus::Partial;
    }
    report.final_url = backend.current_url();
    report.events = backend.events();
    return report;
}

std::vector<Skill> filter_by_presence(const std::vector<Skill>& skills, const PageSnapshot& page,
                                      const MatchWeights& weights) {
    std::vector<Skill> out;
    for (const auto& skill : skills) {
        const ElementRef* first_ref = nullptr;
        for (const auto& step : skill.action_steps) {
            if (step.element_ref) {
                first_ref = &*step.element_ref;
                break;
            }
        }
        if (!first_ref || match_element(page, *first_ref, weights)) out.push_back(skill);
    }
    return out;
}

std::map<std::string, ScalarValue> synthesize_default_args(const Skill& skill) {
    std::map<std::string, ScalarValue> args;
    for (const auto& spec : skill.parameters) {
        if (spec.default_value) continue; // the default kicks in on its own
        switch (spec.type) {
        case ParamType::Str: args.emplace(spec.name, ScalarValue(std::string("test"))); break;
        case ParamType::Int: args.emplace(spec.name, ScalarValue(1LL)); break;
        case ParamType::Float: args.emplace(spec.name, ScalarValue(1.0)); break;
        case ParamType::Bool: args.emplace(spec.name, ScalarValue(true)); break;
        }
    }
    return args;
}

} // namespace skillkit
