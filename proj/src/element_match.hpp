#pragma once

#include <optional>

#include "html.hpp"
#include "skill.hpp"

namespace skillkit {

/// Scoring constants for element resolution. The defaults are the pinned
/// values used by tests; override via engine config for experiments.
struct MatchWeights {
    int id = 4;
    int name = 3;
    int attr_exact = 2; // aria-label, placeholder, type, href
    int class_token = 1;
    int text_equal = 3;
    int text_contains = 1;
    int threshold = 3;
};

struct MatchResult {
    int element_index = -1;
    int score = 0;
};

/// Scores every element whose tag equals ref.tag_name and returns the best
/// one at or above the threshold; ties resolve to the smallest order index.
/// nullopt means the ref is ungrounded on this page.
std::optional<MatchResult> match_element(const PageSnapshot& page, const ElementRef& ref,
                                         const MatchWeights& weights = {});

} // namespace skillkit
