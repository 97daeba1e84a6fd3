#include "fixture.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace skillkit {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

double scalar_to_number(const ScalarValue* value, double fallback) {
    if (!value) return fallback;
    if (value->is_int()) return static_cast<double>(value->as_int());
    if (value->is_float()) return value->as_float();
    if (value->is_string()) {
        const std::string& s = value->as_string();
        double out = fallback;
        std::from_chars(s.data(), s.data() + s.size(), out);
        return out;
    }
    return fallback;
}

bool scalar_to_bool(const ScalarValue* value, bool fallback) {
    if (!value) return fallback;
    if (value->is_bool()) return value->as_bool();
    if (value->is_string()) {
        const std::string& s = value->as_string();
        if (s == "true" || s == "1") return true;
        if (s == "false" || s == "0") return false;
    }
    if (value->is_int()) return value->as_int() != 0;
    return fallback;
}

std::string scalar_to_string(const ScalarValue* value, const std::string& fallback = "") {
    return value ? value->to_text() : fallback;
}

} // namespace

bool is_blocking_kind(std::string_view kind) {
    return kind == "no-match" || kind == "unknown-target" || kind == "option-not-found";
}

// ---------------------------------------------------------------------------
// SiteFixture

SiteFixture SiteFixture::from_dir(const std::string& dir) {
    fs::path root(dir);
    ojson sitemap = ojson::parse(slurp(root / "sitemap.json"), nullptr, false);
    if (sitemap.is_discarded() || !sitemap.is_object())
        throw SchemaError("sitemap.json", "must be a JSON object");
    auto pages = sitemap.find("pages");
    if (pages == sitemap.end() || !pages->is_object())
        throw SchemaError("sitemap.json", "missing 'pages' object");

    SiteFixture fixture;
    for (const auto& [url, file] : pages->items()) {
        if (!file.is_string()) throw SchemaError("sitemap.json", "page path must be a string");
        fixture.pages_[url] = slurp(root / file.get<std::string>());
    }
    if (auto actions = sitemap.find("form_actions"); actions != sitemap.end()) {
        for (const auto& [url, forms] : actions->items())
            for (const auto& [form_id, target] : forms.items())
                fixture.form_actions_[url][form_id] = target.get<std::string>();
    }
    return fixture;
}

SiteFixture SiteFixture::from_pages(std::map<std::string, std::string> pages) {
    SiteFixture fixture;
    fixture.pages_ = std::move(pages);
    return fixture;
}

const std::string& SiteFixture::source(const std::string& url) const {
    auto it = pages_.find(url);
    if (it == pages_.end()) throw NotFoundError("no fixture page for URL: " + url);
    return it->second;
}

std::vector<std::string> SiteFixture::urls() const {
    std::vector<std::string> out;
    out.reserve(pages_.size());
    for (const auto& [url, _] : pages_) out.push_back(url);
    return out;
}

// ---------------------------------------------------------------------------
// URL resolution / form encoding

std::string resolve_url(const std::string& base, const std::string& ref) {
    if (ref.find("://") != std::string::npos) return ref;
    // Split base into scheme://host and path.
    std::size_t scheme_end = base.find("://");
    std::size_t host_start = scheme_end == std::string::npos ? 0 : scheme_end + 3;
    std::size_t path_start = base.find('/', host_start);
    std::string origin = path_start == std::string::npos ? base : base.substr(0, path_start);
    if (ref.empty()) return base;
    if (ref[0] == '/') return origin + ref;
    // Relative to the base path's directory.
    std::string path = path_start == std::string::npos ? "/" : base.substr(path_start);
    if (auto query = path.find('?'); query != std::string::npos) path = path.substr(0, query);
    std::size_t last_slash = path.rfind('/');
    path = path.substr(0, last_slash + 1);
    return origin + path + ref;
}

std::string encode_form_query(const std::vector<std::pair<std::string, std::string>>& fields) {
    auto encode = [](const std::string& s) {
        std::string out;
        for (unsigned char c : s) {
            if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
                out.push_back(static_cast<char>(c));
            } else if (c == ' ') {
                out.push_back('+');
            } else {
                char buf[4];
                std::snprintf(buf, sizeof buf, "%%%02X", c);
                out += buf;
            }
        }
        return out;
    };
    std::string out;
    for (const auto& [key, value] : fields) {
        if (!out.empty()) out.push_back('&');
        out += encode(key) + "=" + encode(value);
    }
    return out;
}

// ---------------------------------------------------------------------------
// FixtureBackend

void FixtureBackend::record(int step_index, std::string_view action, int target, ojson detail) {
    ojson event;
    event["step_index"] = step_index;
    event["action_type"] = std::string(action);
    if (target >= 0) event["target_order_index"] = target;
    event["detail"] = std::move(detail);
    events_.push_back(std::move(event));
}

PageSnapshot FixtureBackend::load(const std::string& url) {
    page_ = parse_html(fixture_.source(url), url);
    loaded_ = true;
    focused_ = -1;
    scroll_offset_ = 0.0;
    return page_;
}

std::string FixtureBackend::form_action_url(int form_index) const {
    const Element& form = *page_.element(form_index);
    auto overrides = fixture_.form_actions().find(page_.url);
    if (overrides != fixture_.form_actions().end()) {
        if (auto id = form.attr("id")) {
            auto it = overrides->second.find(*id);
            if (it != overrides->second.end()) return resolve_url(page_.url, it->second);
        }
    }
    std::string action = form.attr("action").value_or("");
    if (action.empty()) {
        std::string base = page_.url;
        if (auto query = base.find('?'); query != std::string::npos) base = base.substr(0, query);
        return base;
    }
    return resolve_url(page_.url, action);
}

StepOutcome FixtureBackend::submit_form(int form_index, int step_index) {
    std::vector<std::pair<std::string, std::string>> fields;
    for (int index : page_.descendants(form_index)) {
        const Element& el = *page_.element(index);
        auto name = el.attr("name");
        if (!name || name->empty()) continue;
        if (el.tag == "input") {
            std::string type = el.attr("type").value_or("text");
            if (type == "submit" || type == "button" || type == "reset" || type == "image")
                continue;
            if ((type == "checkbox" || type == "radio") && !el.attr("checked")) continue;
            fields.emplace_back(*name, el.value);
        } else if (el.tag == "select" || el.tag == "textarea") {
            fields.emplace_back(*name, el.value);
        }
    }
    std::string action = form_action_url(form_index);
    if (auto query = action.find('?'); query != std::string::npos) action = action.substr(0, query);
    std::string target = action + (fields.empty() ? "" : "?" + encode_form_query(fields));

    ojson detail;
    detail["action_url"] = action;
    ojson field_obj = ojson::object();
    for (const auto& [key, value] : fields) field_obj[key] = value;
    detail["fields"] = std::move(field_obj);
    detail["target"] = target;
    record(step_index, "submit", form_index, std::move(detail));

    if (!fixture_.has(target)) {
        return {.ok = false,
                .kind = "unknown-target",
                .message = "submit target not in fixture: " + target,
                .noop = false};
    }
    load(target);
    return {};
}

StepOutcome FixtureBackend::navigate_to(const std::string& url, int step_index,
                                        const char* action_name) {
    std::string resolved = resolve_url(page_.url, url);
    ojson detail;
    detail["url"] = resolved;
    record(step_index, action_name, -1, std::move(detail));
    if (!fixture_.has(resolved)) {
        return {.ok = false,
                .kind = "unknown-target",
                .message = "navigation target not in fixture: " + resolved,
                .noop = false};
    }
    load(resolved);
    return {};
}

StepOutcome FixtureBackend::do_click(const ActionStep& step, int step_index) {
    auto match = match_element(page_, *step.element_ref, weights_);
    if (!match) {
        record(step_index, "click", -1, ojson{{"error", "no-match"}});
        return {.ok = false,
                .kind = "no-match",
                .message = "no element matches ref <" + step.element_ref->tag_name + ">",
                .noop = false};
    }
    const Element& el = *page_.element(match->element_index);
    focused_ = match->element_index;

    if (el.tag == "a") {
        if (auto href = el.attr("href"); href && !href->empty()) {
            record(step_index, "click", match->element_index, ojson{{"href", *href}});
            std::string resolved = resolve_url(page_.url, *href);
            if (!fixture_.has(resolved)) {
                return {.ok = false,
                        .kind = "unknown-target",
                        .message = "link target not in fixture: " + resolved,
                        .noop = false};
            }
            load(resolved);
            return {};
        }
    }

    bool submit_type = false;
    if (el.tag == "button") {
        std::string type = el.attr("type").value_or("submit");
        submit_type = type != "button" && type != "reset";
    } else if (el.tag == "input") {
        submit_type = el.attr("type").value_or("") == "submit";
    }
    int form = page_.enclosing(match->element_index, "form");
    if (submit_type && form >= 0) return submit_form(form, step_index);

    // Benign no-op click (e.g. focusing a field or clicking a plain div).
    record(step_index, "click", match->element_index, ojson{{"note", "no-op"}});
    return {.ok = true, .kind = "", .message = "", .noop = true};
}

StepOutcome FixtureBackend::do_input(const ActionStep& step, int step_index) {
    auto match = match_element(page_, *step.element_ref, weights_);
    if (!match) {
        record(step_index, "input", -1, ojson{{"error", "no-match"}});
        return {.ok = false,
                .kind = "no-match",
                .message = "no element matches ref <" + step.element_ref->tag_name + ">",
                .noop = false};
    }
    Element& el = page_.elements[static_cast<std::size_t>(match->element_index)];
    std::string text = scalar_to_string(step.param("text"));
    bool clear = scalar_to_bool(step.param("clear"), true); // clear by default
    el.value = clear ? text : el.value + text;
    focused_ = match->element_index;
    record(step_index, "input", match->element_index, ojson{{"value", el.value}});
    return {};
}

StepOutcome FixtureBackend::do_select(const ActionStep& step, int step_index) {
    auto match = match_element(page_, *step.element_ref, weights_);
    if (!match) {
        record(step_index, "select_dropdown", -1, ojson{{"error", "no-match"}});
        return {.ok = false,
                .kind = "no-match",
                .message = "no element matches ref <" + step.element_ref->tag_name + ">",
                .noop = false};
    }
    std::string wanted = collapse_whitespace(scalar_to_string(step.param("text")));
    for (int index : page_.descendants(match->element_index)) {
        Element& option = page_.elements[static_cast<std::size_t>(index)];
        if (option.tag != "option" || option.text != wanted) continue;
        Element& select = page_.elements[static_cast<std::size_t>(match->element_index)];
        select.value = option.attr("value").value_or(option.text);
        focused_ = match->element_index;
        record(step_index, "select_dropdown", match->element_index,
               ojson{{"option", wanted}, {"value", select.value}});
        return {};
    }
    record(step_index, "select_dropdown", match->element_index,
           ojson{{"error", "option-not-found"}, {"option", wanted}});
    return {.ok = false,
            .kind = "option-not-found",
            .message = "no option with text '" + wanted + "'",
            .noop = false};
}

StepOutcome FixtureBackend::apply(const ActionStep& step, int step_index) {
    if (!loaded_) throw Error("backend has no loaded page");
    switch (step.action_type) {
    case ActionType::Click:
        return do_click(step, step_index);
    case ActionType::Input:
        return do_input(step, step_index);
    case ActionType::SelectDropdown:
        return do_select(step, step_index);
    case ActionType::Scroll: {
        std::string direction = scalar_to_string(step.param("direction"), "down");
        double pages = scalar_to_number(step.param("pages"), 1.0);
        scroll_offset_ += (direction == "up" ? -pages : pages);
        record(step_index, "scroll", -1,
               ojson{{"direction", direction}, {"pages", pages}, {"offset", scroll_offset_}});
        return {};
    }
    case ActionType::SendKeys: {
        std::string keys = scalar_to_string(step.param("keys"));
        record(step_index, "send_keys", focused_, ojson{{"keys", keys}});
        if (keys == "Enter" && focused_ >= 0) {
            const Element& el = *page_.element(focused_);
            int form = page_.enclosing(focused_, "form");
            if (form >= 0 && (el.tag == "input" || el.tag == "textarea"))
                return submit_form(form, step_index);
        }
        return {};
    }
    case ActionType::Navigate: {
        std::string url = scalar_to_string(step.param("url"));
        return navigate_to(url, step_index, "navigate");
    }
    case ActionType::Wait: {
        double seconds = scalar_to_number(step.param("seconds"), 1.0);
        clock_seconds_ += seconds;
        record(step_index, "wait", -1, ojson{{"seconds", seconds}, {"clock", clock_seconds_}});
        return {};
    }
    }
    return {.ok = false, .kind = "internal", .message = "unhandled action type", .noop = false};
}

} // namespace skillkit
