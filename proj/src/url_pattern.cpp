#include "url_pattern.hpp"

#include <algorithm>
#include <cctype>

#include "errors.hpp"
#include "jsonx.hpp"

namespace skillkit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Length of a leading "<scheme>://" prefix, or 0.
std::size_t scheme_prefix_length(std::string_view s) {
    std::size_t i = 0;
    if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) return 0;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '+' ||
                            s[i] == '-' || s[i] == '.'))
        ++i;
    if (s.substr(i, 3) == "://") return i + 3;
    return 0;
}

} // namespace

std::string normalize_url(std::string_view raw, const AliasMap& aliases) {
    std::string_view s = raw;
    s.remove_prefix(scheme_prefix_length(s));

    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    if (auto query = s.find('?'); query != std::string_view::npos) s = s.substr(0, query);
    if (s.empty()) throw UrlError("unparseable URL: '" + std::string(raw) + "'");

    std::size_t slash = s.find('/');
    std::string host = lower(std::string(s.substr(0, slash)));
    if (host.empty()) throw UrlError("unparseable URL (empty host): '" + std::string(raw) + "'");
    std::string path = slash == std::string_view::npos ? "" : std::string(s.substr(slash));

    auto alias = aliases.find(host);
    std::string result = (alias != aliases.end() ? alias->second : host) + path;
    while (result.size() > 1 && result.back() == '/') result.pop_back();
    if (result.empty() || result == "/")
        throw UrlError("unparseable URL: '" + std::string(raw) + "'");
    return result;
}

bool glob_match(std::string_view pattern, std::string_view text) {
    std::size_t p = 0, t = 0;
    std::size_t star = std::string_view::npos, mark = 0;
    while (t < text.size()) {
        if (p < pattern.size() && pattern[p] == '*') {
            star = p++;
            mark = t;
        } else if (p < pattern.size() && pattern[p] == text[t]) {
            ++p;
            ++t;
        } else if (star != std::string_view::npos) {
            p = star + 1;
            t = ++mark;
        } else {
            return false;
        }
    }
    while (p < pattern.size() && pattern[p] == '*') ++p;
    return p == pattern.size();
}

int pattern_specificity(std::string_view pattern) {
    int count = 0;
    std::size_t start = 0;
    while (start <= pattern.size()) {
        std::size_t end = pattern.find('/', start);
        std::string_view segment = pattern.substr(
            start, end == std::string_view::npos ? std::string_view::npos : end - start);
        if (segment.find('*') == std::string_view::npos) ++count;
        if (end == std::string_view::npos) break;
        start = end + 1;
    }
    return count;
}

UrlPattern UrlPattern::parse(std::string pattern) {
    if (pattern.empty()) throw SchemaError("meta_url", "URL pattern must be non-empty");
    if (pattern.find("://") != std::string::npos)
        throw SchemaError("meta_url", "URL pattern must not contain a scheme: '" + pattern + "'");
    if (pattern.find('?') != std::string::npos)
        throw SchemaError("meta_url",
                          "URL pattern must not contain a query string: '" + pattern + "'");
    if (pattern.find('#') != std::string::npos)
        throw SchemaError("meta_url",
                          "URL pattern must not contain a fragment: '" + pattern + "'");
    UrlPattern out;
    out.specificity = pattern_specificity(pattern);
    out.pattern = std::move(pattern);
    return out;
}

AliasMap parse_alias_map(const std::string& json_text) {
    njson doc = njson::parse(json_text, nullptr, false);
    if (doc.is_discarded() || !doc.is_object())
        throw SchemaError("", "alias map must be a JSON object");
    AliasMap out;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string())
            throw SchemaError(key, "alias value must be a string");
        out[lower(key)] = value.get<std::string>();
    }
    return out;
}

} // namespace skillkit
