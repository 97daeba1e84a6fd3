#include "element_match.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace skillkit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool class_tokens_overlap(std::string_view a, std::string_view b) {
    std::istringstream sa{std::string(a)};
    std::string token;
    while (sa >> token) {
        std::istringstream sb{std::string(b)};
        std::string other;
        while (sb >> other)
            if (token == other) return true;
    }
    return false;
}

int score_element(const Element& el, const ElementRef& ref, const MatchWeights& w) {
    int score = 0;
    for (const auto& [key, want] : ref.attributes) {
        auto have = el.attr(key);
        if (key == "id") {
            if (have && *have == want) score += w.id;
        } else if (key == "name") {
            if (have && *have == want) score += w.name;
        } else if (key == "aria-label" || key == "placeholder" || key == "type" ||
                   key == "href") {
            if (have && *have == want) score += w.attr_exact;
        } else if (key == "class") {
            if (have && class_tokens_overlap(*have, want)) score += w.class_token;
        }
        // Other attribute keys do not contribute to the score.
    }
    if (ref.text_content) {
        std::string want = collapse_whitespace(*ref.text_content);
        if (el.text == want) score += w.text_equal;
        else if (!want.empty() && lower(el.text).find(lower(want)) != std::string::npos)
            score += w.text_contains;
    }
    return score;
}

} // namespace

std::optional<MatchResult> match_element(const PageSnapshot& page, const ElementRef& ref,
                                         const MatchWeights& weights) {
    MatchResult best;
    for (const auto& el : page.elements) {
        if (el.tag != ref.tag_name) continue;
        int score = score_element(el, ref, weights);
        if (score > best.score) {
            best.score = score;
            best.element_index = el.order_index;
        }
    }
    if (best.element_index < 0 || best.score < weights.threshold) return std::nullopt;
    return best;
}

} // namespace skillkit
