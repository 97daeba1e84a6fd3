#pragma once

#include <map>
#include <string>
#include <string_view>

namespace skillkit {

/// host[:port] -> site prefix, e.g. {"host.example:7770": "shopping"}.
using AliasMap = std::map<std::string, std::string>;

/// Normalizes a URL to the scheme-less, query-less path form used as graph
/// node keys: host lowercased and alias-replaced, query/fragment stripped,
/// trailing slashes removed. Throws UrlError on unparseable input.
std::string normalize_url(std::string_view raw, const AliasMap& aliases);

/// Whole-string glob match where `*` matches any character sequence including
/// `/`. Only `*` is special; matching is case-sensitive.
bool glob_match(std::string_view pattern, std::string_view text);

/// Number of `/`-separated segments containing no `*`.
int pattern_specificity(std::string_view pattern);

struct UrlPattern {
    std::string pattern;
    int specificity = 0;

    /// Validates pattern shape (non-empty, no scheme/query/fragment) and
    /// computes specificity. Throws SchemaError.
    static UrlPattern parse(std::string pattern);

    bool matches(std::string_view normalized) const { return glob_match(pattern, normalized); }
    bool operator==(const UrlPattern&) const = default;
};

AliasMap parse_alias_map(const std::string& json_text);

} // namespace skillkit
