#pragma once

#include <map>
#include <string>
#include <vector>

#include "element_match.hpp"
#include "html.hpp"
#include "jsonx.hpp"
#include "skill.hpp"

namespace skillkit {

/// Outcome of applying one resolved action step.
struct StepOutcome {
    bool ok = true;
    std::string kind;    // error kind when !ok: no-match, unknown-target, option-not-found, ...
    std::string message; // human-readable detail
    bool noop = false;   // benign no-effect action (e.g. click on a plain div)
};

/// Blocking error kinds halt grounded execution.
bool is_blocking_kind(std::string_view kind);

/// A closed-world website: URL -> HTML source, loaded from a fixture
/// directory (sitemap.json + HTML files).
class SiteFixture {
public:
    static SiteFixture from_dir(const std::string& dir);
    static SiteFixture from_pages(std::map<std::string, std::string> pages);

    bool has(const std::string& url) const { return pages_.count(url) > 0; }
    const std::string& source(const std::string& url) const;
    std::vector<std::string> urls() const; // sorted

    /// Optional per-page form action override: page url -> form id -> action.
    const std::map<std::string, std::map<std::string, std::string>>& form_actions() const {
        return form_actions_;
    }

private:
    std::map<std::string, std::string> pages_;
    std::map<std::string, std::map<std::string, std::string>> form_actions_;
};

/// Browser session interface. The simulated implementation is deterministic:
/// replaying the same steps from the same fixture yields identical event logs
/// and final URLs.
class BrowserBackend {
public:
    virtual ~BrowserBackend() = default;

    /// Loads a page and makes it current. Throws NotFoundError when the URL
    /// is outside the fixture.
    virtual PageSnapshot load(const std::string& url) = 0;

    /// Applies one fully substituted action step to the current page.
    virtual StepOutcome apply(const ActionStep& step, int step_index) = 0;

    virtual PageSnapshot current() const = 0;
    virtual std::string current_url() const = 0;
    virtual const std::vector<ojson>& events() const = 0;
};

class FixtureBackend : public BrowserBackend {
public:
    explicit FixtureBackend(SiteFixture fixture, MatchWeights weights = {})
        : fixture_(std::move(fixture)), weights_(weights) {}

    PageSnapshot load(const std::string& url) override;
    StepOutcome apply(const ActionStep& step, int step_index) override;
    PageSnapshot current() const override { return page_; }
    std::string current_url() const override { return page_.url; }
    const std::vector<ojson>& events() const override { return events_; }

private:
    StepOutcome do_click(const ActionStep& step, int step_index);
    StepOutcome do_input(const ActionStep& step, int step_index);
    StepOutcome do_select(const ActionStep& step, int step_index);
    StepOutcome submit_form(int form_index, int step_index);
    StepOutcome navigate_to(const std::string& url, int step_index, const char* action_name);
    std::string form_action_url(int form_index) const;
    void record(int step_index, std::string_view action, int target, ojson detail);

    SiteFixture fixture_;
    MatchWeights weights_;
    PageSnapshot page_;
    bool loaded_ = false;
    int focused_ = -1;
    double scroll_offset_ = 0.0;
    double clock_seconds_ = 0.0;
    std::vector<ojson> events_;
};

/// Resolves a (possibly relative) href against a base URL.
std::string resolve_url(const std::string& base, const std::string& ref);

/// application/x-www-form-urlencoded encoding of form fields.
std::string encode_form_query(const std::vector<std::pair<std::string, std::string>>& fields);

} // namespace skillkit
