#include "html.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace skillkit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool is_void_element(std::string_view tag) {
    static const std::set<std::string_view> kVoid = {"area",  "base", "br",    "col",  "embed",
                                                     "hr",    "img",  "input", "link", "meta",
                                                     "param", "source", "track", "wbr"};
    return kVoid.count(tag) > 0;
}

bool is_raw_text_element(std::string_view tag) {
    return tag == "script" || tag == "style" || tag == "textarea" || tag == "title";
}

bool is_invisible_element(std::string_view tag) {
    return tag == "script" || tag == "style" || tag == "noscript" || tag == "template";
}

void append_codepoint(std::string& out, unsigned long cp) {
    if (cp <= 0x7F) {
        out.push_back(static_cast<char>(cp));
    } else if (cp <= 0x7FF) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0xFFFF) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp <= 0x10FFFF) {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string decode_entities(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] != '&') {
            out.push_back(text[i++]);
            continue;
        }
        std::size_t semi = text.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(text[i++]);
            continue;
        }
        std::string_view name = text.substr(i + 1, semi - i - 1);
        if (name == "amp") out.push_back('&');
        else if (name == "lt") out.push_back('<');
        else if (name == "gt") out.push_back('>');
        else if (name == "quot") out.push_back('"');
        else if (name == "apos") out.push_back('\'');
        else if (name == "nbsp") out.push_back(' ');
        else if (!name.empty() && name[0] == '#') {
            bool hex = name.size() > 1 && (name[1] == 'x' || name[1] == 'X');
            unsigned long cp = 0;
            bool ok = name.size() > (hex ? 2u : 1u);
            for (std::size_t j = hex ? 2 : 1; ok && j < name.size(); ++j) {
                char c = name[j];
                unsigned digit;
                if (c >= '0' && c <= '9') digit = static_cast<unsigned>(c - '0');
                else if (hex && c >= 'a' && c <= 'f') digit = static_cast<unsigned>(c - 'a' + 10);
                else if (hex && c >= 'A' && c <= 'F') digit = static_cast<unsigned>(c - 'A' + 10);
                else { ok = false; break; }
                cp = cp * (hex ? 16 : 10) + digit;
                if (cp > 0x10FFFF) { ok = false; break; }
            }
            if (!ok) {
                out.push_back(text[i++]);
                continue;
            }
            append_codepoint(out, cp);
        } else {
            out.push_back(text[i++]);
            continue;
        }
        i = semi + 1;
    }
    return out;
}

std::string escape_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

std::string escape_attr(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '"': out += "&quot;"; break;
        default: out.push_back(c);
        }
    }
    return out;
}

struct Parser {
    std::string_view src;
    std::size_t pos = 0;
    PageSnapshot doc;
    std::vector<int> stack; // open element arena indices

    void add_text(std::string text) {
        if (text.empty()) return;
        Element::Child child;
        child.is_text = true;
        child.text = std::move(text);
        if (stack.empty()) doc.top.push_back(std::move(child));
        else doc.elements[static_cast<std::size_t>(stack.back())].children.push_back(std::move(child));
    }

    int add_element(Element el) {
        int index = static_cast<int>(doc.elements.size());
        el.order_index = index;
        el.parent = stack.empty() ? -1 : stack.back();
        Element::Child child;
        child.element = index;
        if (stack.empty()) doc.top.push_back(child);
        else doc.elements[static_cast<std::size_t>(stack.back())].children.push_back(child);
        doc.elements.push_back(std::move(el));
        return index;
    }

    void close_implied_for(std::string_view tag) {
        // Minimal implied-end-tag handling for tag soup.
        auto top_tag = [&]() -> std::string_view {
            return stack.empty() ? std::string_view{}
                                 : doc.elements[static_cast<std::size_t>(stack.back())].tag;
        };
        if ((tag == "li" && top_tag() == "li") || (tag == "p" && top_tag() == "p") ||
            (tag == "option" && top_tag() == "option") ||
            ((tag == "dt" || tag == "dd") && (top_tag() == "dt" || top_tag() == "dd")) ||
            ((tag == "td" || tag == "th") && (top_tag() == "td" || top_tag() == "th"))) {
            stack.pop_back();
        } else if (tag == "tr") {
            while (!stack.empty() &&
                   (top_tag() == "td" || top_tag() == "th" || top_tag() == "tr"))
                stack.pop_back();
        }
    }

    void handle_end_tag(const std::string& tag) {
        for (std::size_t i = stack.size(); i-- > 0;) {
            if (doc.elements[static_cast<std::size_t>(stack[i])].tag == tag) {
                stack.resize(i);
                return;
            }
        }
        // Unmatched end tag: ignored.
    }

    void parse_tag() {
        // pos points at '<'.
        if (src.compare(pos, 4, "<!--") == 0) {
            std::size_t end = src.find("-->", pos + 4);
            pos = end == std::string_view::npos ? src.size() : end + 3;
            return;
        }
        if (pos + 1 < src.size() && (src[pos + 1] == '!' || src[pos + 1] == '?')) {
            std::size_t end = src.find('>', pos);
            pos = end == std::string_view::npos ? src.size() : end + 1;
            return;
        }
        bool closing = pos + 1 < src.size() && src[pos + 1] == '/';
        std::size_t i = pos + (closing ? 2 : 1);
        std::size_t name_start = i;
        while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                  src[i] == '-' || src[i] == ':'))
            ++i;
        if (i == name_start) { // '<' followed by junk: literal text
            add_text("<");
            ++pos;
            return;
        }
        std::string tag = lower(std::string(src.substr(name_start, i - name_start)));

        Element el;
        el.tag = tag;
        bool self_closed = false;
        while (i < src.size() && src[i] != '>') {
            if (std::isspace(static_cast<unsigned char>(src[i]))) { ++i; continue; }
            if (src[i] == '/') { self_closed = true; ++i; continue; }
            std::size_t attr_start = i;
            while (i < src.size() && src[i] != '=' && src[i] != '>' && src[i] != '/' &&
                   !std::isspace(static_cast<unsigned char>(src[i])))
                ++i;
            std::string key = lower(std::string(src.substr(attr_start, i - attr_start)));
            std::string attr_value;
            while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
            if (i < src.size() && src[i] == '=') {
                ++i;
                while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
                if (i < src.size() && (src[i] == '"' || src[i] == '\'')) {
                    char quote = src[i++];
                    std::size_t value_start = i;
                    while (i < src.size() && src[i] != quote) ++i;
                    attr_value = decode_entities(src.substr(value_start, i - value_start));
                    if (i < src.size()) ++i;
                } else {
                    std::size_t value_start = i;
                    while (i < src.size() && src[i] != '>' &&
                           !std::isspace(static_cast<unsigned char>(src[i])))
                        ++i;
                    attr_value = decode_entities(src.substr(value_start, i - value_start));
                }
            }
            if (!key.empty() && !closing) el.attributes.emplace_back(std::move(key), std::move(attr_value));
        }
        if (i < src.size()) ++i; // consume '>'
        pos = i;

        if (closing) {
            handle_end_tag(tag);
            return;
        }

        close_implied_for(tag);
        int index = add_element(std::move(el));
        Element& created = doc.elements[static_cast<std::size_t>(index)];
        if (created.tag == "input") created.value = created.attr("value").value_or("");

        if (is_raw_text_element(tag) && !self_closed) {
            std::string close_marker = "</" + tag;
            std::size_t end = pos;
            while (true) {
                end = src.find('<', end);
                if (end == std::string_view::npos) { end = src.size(); break; }
                std::string_view candidate = src.substr(end, close_marker.size());
                std::string lowered = lower(std::string(candidate));
                if (lowered == close_marker) break;
                ++end;
            }
            std::string raw(src.substr(pos, end - pos));
            if (!raw.empty()) {
                Element::Child child;
                child.is_text = true;
                child.text = std::move(raw);
                created.children.push_back(std::move(child));
            }
            if (tag == "textarea")
                created.value = collapse_whitespace(
                    created.children.empty() ? "" : created.children.back().text);
            std::size_t gt = src.find('>', end);
            pos = gt == std::string_view::npos ? src.size() : gt + 1;
            return;
        }
        if (!self_closed && !is_void_element(tag)) stack.push_back(index);
    }

    void run() {
        while (pos < src.size()) {
            if (src[pos] == '<') {
                parse_tag();
            } else {
                std::size_t next = src.find('<', pos);
                if (next == std::string_view::npos) next = src.size();
                add_text(decode_entities(src.substr(pos, next - pos)));
                pos = next;
            }
        }
    }
};

std::string compute_text(PageSnapshot& doc, int index) {
    Element& el = doc.elements[static_cast<std::size_t>(index)];
    std::string combined;
    if (!is_invisible_element(el.tag)) {
        for (const auto& child : el.children) {
            if (child.is_text) {
                combined += child.text;
                combined += ' ';
            } else {
                combined += compute_text(doc, child.element);
                combined += ' ';
            }
        }
    } else {
        for (const auto& child : el.children)
            if (!child.is_text) compute_text(doc, child.element);
    }
    el.text = collapse_whitespace(combined);
    return el.text;
}

void select_initial_value(PageSnapshot& doc) {
    for (auto& el : doc.elements) {
        if (el.tag != "select") continue;
        int chosen = -1;
        for (int child : doc.descendants(el.order_index)) {
            const Element& option = doc.elements[static_cast<std::size_t>(child)];
            if (option.tag != "option") continue;
            if (chosen < 0) chosen = child;
            if (option.attr("selected")) {
                chosen = child;
                break;
            }
        }
        if (chosen >= 0) {
            const Element& option = doc.elements[static_cast<std::size_t>(chosen)];
            el.value = option.attr("value").value_or(option.text);
        }
    }
}

void serialize_children(const PageSnapshot& page, const std::vector<Element::Child>& children,
                        std::string& out);

void serialize_element(const PageSnapshot& page, const Element& el, std::string& out) {
    out += '<';
    out += el.tag;
    for (const auto& [k, v] : el.attributes) {
        out += ' ';
        out += k;
        out += "=\"";
        out += escape_attr(v);
        out += '"';
    }
    out += '>';
    if (is_void_element(el.tag)) return;
    serialize_children(page, el.children, out);
    out += "</";
    out += el.tag;
    out += '>';
}

void serialize_children(const PageSnapshot& page, const std::vector<Element::Child>& children,
                        std::string& out) {
    for (const auto& child : children) {
        if (child.is_text) out += escape_text(child.text);
        else serialize_element(page, page.elements[static_cast<std::size_t>(child.element)], out);
    }
}

} // namespace

std::optional<std::string> Element::attr(std::string_view key) const {
    for (const auto& [k, v] : attributes)
        if (k == key) return v;
    return std::nullopt;
}

int PageSnapshot::enclosing(int index, std::string_view tag) const {
    while (index >= 0) {
        const Element& el = elements[static_cast<std::size_t>(index)];
        if (el.tag == tag) return index;
        index = el.parent;
    }
    return -1;
}

std::vector<int> PageSnapshot::descendants(int index) const {
    std::vector<int> out;
    std::vector<int> pending;
    for (auto it = elements[static_cast<std::size_t>(index)].children.rbegin();
         it != elements[static_cast<std::size_t>(index)].children.rend(); ++it)
        if (!it->is_text) pending.push_back(it->element);
    while (!pending.empty()) {
        int current = pending.back();
        pending.pop_back();
        out.push_back(current);
        const Element& el = elements[static_cast<std::size_t>(current)];
        for (auto it = el.children.rbegin(); it != el.children.rend(); ++it)
            if (!it->is_text) pending.push_back(it->element);
    }
    return out;
}

PageSnapshot parse_html(std::string_view source, std::string url) {
    Parser parser;
    parser.src = source;
    parser.doc.url = std::move(url);
    parser.run();
    for (const auto& child : parser.doc.top)
        if (!child.is_text) compute_text(parser.doc, child.element);
    select_initial_value(parser.doc);
    return std::move(parser.doc);
}

std::string to_html(const PageSnapshot& page) {
    std::string out;
    serialize_children(page, page.top, out);
    return out;
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool in_space = true; // swallow leading whitespace
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) {
            if (!in_space) out.push_back(' ');
            in_space = true;
        } else {
            out.push_back(c);
            in_space = false;
        }
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    return out;
}

} // namespace skillkit
