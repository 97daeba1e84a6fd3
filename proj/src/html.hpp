#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace skillkit {

/// One node of a parsed page. Children interleave element references and raw
/// text segments in document order.
struct Element {
    struct Child {
        bool is_text = false;
        int element = -1; // arena index when !is_text
        std::string text;
    };

    std::string tag; // lowercase
    std::vector<std::pair<std::string, std::string>> attributes; // lowercase keys
    std::vector<Child> children;
    std::string text;     // collapsed visible descendant text
    int order_index = 0;  // == arena index (document order)
    int parent = -1;
    std::string value;    // mutable state for input/select/textarea

    std::optional<std::string> attr(std::string_view key) const;
};

/// A parsed HTML document: the observation against which element refs are
/// matched and actions are applied. Value type; copies are independent.
struct PageSnapshot {
    std::string url;
    std::vector<Element> elements;   // arena, document order
    std::vector<Element::Child> top; // top-level children

    const Element* element(int index) const {
        return index >= 0 && index < static_cast<int>(elements.size())
                   ? &elements[static_cast<std::size_t>(index)]
                   : nullptr;
    }
    /// Nearest ancestor (or self) with the given tag, or -1.
    int enclosing(int index, std::string_view tag) const;
    /// Document-order descendant element indices of `index`.
    std::vector<int> descendants(int index) const;
};

/// Error-tolerant tag-soup parser; never throws on malformed markup. Empty
/// source yields an empty document.
PageSnapshot parse_html(std::string_view source, std::string url);

/// Serializes the normalized document back to markup.
std::string to_html(const PageSnapshot& page);

/// Whitespace-collapsed, trimmed form used for all visible-text comparisons.
std::string collapse_whitespace(std::string_view text);

} // namespace skillkit
