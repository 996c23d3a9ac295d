// SPDX-License-Identifier: Apache-2.0
#include "crawler/extract.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <set>

#include "util/strings.hpp"

namespace ami::crawl {

namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

const std::set<std::string>& excluded_tags() {
    static const std::set<std::string> tags = {"script", "style",  "nav", "header",
                                               "footer", "aside", "form", "noscript",
                                               "svg",    "iframe"};
    return tags;
}

const std::set<std::string>& block_tags() {
    static const std::set<std::string> tags = {
        "p",       "div",   "br",      "h1",   "h2",     "h3",         "h4",    "h5",
        "h6",      "li",    "ul",      "ol",   "table",  "tr",         "td",    "th",
        "section", "article", "blockquote", "pre", "hr", "main",       "figure",
        "figcaption", "dl",  "dt",     "dd",   "title",  "head",       "body"};
    return tags;
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x110000) {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Replaces bytes that do not form valid UTF-8 sequences.
std::string utf8_lossy(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    size_t i = 0;
    while (i < in.size()) {
        unsigned char c = in[i];
        size_t len = 0;
        if (c < 0x80) len = 1;
        else if ((c & 0xE0) == 0xC0) len = 2;
        else if ((c & 0xF0) == 0xE0) len = 3;
        else if ((c & 0xF8) == 0xF0) len = 4;
        bool valid = len > 0 && i + len <= in.size();
        for (size_t k = 1; valid && k < len; ++k) {
            if ((static_cast<unsigned char>(in[i + k]) & 0xC0) != 0x80) valid = false;
        }
        if (valid) {
            out.append(in.substr(i, len));
            i += len;
        } else {
            out.append("\xEF\xBF\xBD");  // U+FFFD
            ++i;
        }
    }
    return out;
}

std::string decode_entities(std::string_view in) {
    static const std::map<std::string, std::string, std::less<>> named = {
        {"amp", "&"},   {"lt", "<"},    {"gt", ">"},    {"quot", "\""},
        {"apos", "'"},  {"nbsp", " "},  {"ndash", "-"}, {"mdash", "-"},
        {"lsquo", "'"}, {"rsquo", "'"}, {"ldquo", "\""}, {"rdquo", "\""},
        {"hellip", "..."}, {"copy", "(c)"}, {"shy", ""},
    };
    std::string out;
    out.reserve(in.size());
    size_t i = 0;
    while (i < in.size()) {
        if (in[i] != '&') {
            out.push_back(in[i++]);
            continue;
        }
        size_t semi = in.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(in[i++]);
            continue;
        }
        std::string_view body = in.substr(i + 1, semi - i - 1);
        if (!body.empty() && body[0] == '#') {
            uint32_t cp = 0;
            bool ok = body.size() > 1;
            if (body.size() > 2 && (body[1] == 'x' || body[1] == 'X')) {
                for (size_t k = 2; k < body.size() && ok; ++k) {
                    char ch = body[k];
                    int d = (ch >= '0' && ch <= '9')   ? ch - '0'
                            : (ch >= 'a' && ch <= 'f') ? ch - 'a' + 10
                            : (ch >= 'A' && ch <= 'F') ? ch - 'A' + 10
                                                       : -1;
                    if (d < 0) ok = false;
                    else cp = cp * 16 + static_cast<uint32_t>(d);
                }
            } else {
                for (size_t k = 1; k < body.size() && ok; ++k) {
                    if (body[k] < '0' || body[k] > '9') ok = false;
                    else cp = cp * 10 + static_cast<uint32_t>(body[k] - '0');
                }
            }
            if (ok && cp > 0 && cp < 0x110000) {
                append_utf8(out, cp);
                i = semi + 1;
                continue;
            }
        } else {
            auto it = named.find(body);
            if (it != named.end()) {
                out.append(it->second);
                i = semi + 1;
                continue;
            }
        }
        out.push_back(in[i++]);  // unknown entity kept literal
    }
    return out;
}

// Collapses space runs, trims spaces around newlines, caps newline runs at 2.
std::string normalize_whitespace(std::string_view in) {
    std::string out;
    out.reserve(in.size());
    int pending_newlines = 0;
    bool pending_space = false;
    bool emitted = false;
    for (char c : in) {
        if (c == '\n') {
            ++pending_newlines;
            pending_space = false;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
            pending_space = true;
        } else {
            if (emitted) {
                if (pending_newlines > 0) {
                    out.append(pending_newlines >= 2 ? 2 : 1, '\n');
                } else if (pending_space) {
                    out.push_back(' ');
                }
            }
            pending_newlines = 0;
            pending_space = false;
            out.push_back(c);
            emitted = true;
        }
    }
    return out;
}

struct TagToken {
    std::string name;   // lowercase
    bool closing = false;
    bool self_closing = false;
};

// Parses a tag starting at in[pos] == '<'. Returns position after '>' and
// fills tok; returns npos when the tag never terminates.
size_t parse_tag(std::string_view in, size_t pos, TagToken& tok) {
    size_t i = pos + 1;
    tok = TagToken{};
    if (i < in.size() && in[i] == '/') {
        tok.closing = true;
        ++i;
    }
    size_t name_start = i;
    while (i < in.size() && (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '-' ||
                             in[i] == ':'))
        ++i;
    tok.name = util::to_lower(in.substr(name_start, i - name_start));
    // attributes: honor quotes so '>' inside values does not end the tag
    char quote = 0;
    for (; i < in.size(); ++i) {
        char c = in[i];
        if (quote) {
            if (c == quote) quote = 0;
        } else if (c == '"' || c == '\'') {
            quote = c;
        } else if (c == '>') {
            if (i > pos + 1 && in[i - 1] == '/') tok.self_closing = true;
            return i + 1;
        }
    }
    return std::string_view::npos;
}

}  // namespace

ExtractedPage extract_text(std::string_view html_bytes, const std::string& /*url*/) {
    std::string html = utf8_lossy(html_bytes);
    std::string_view in = html;

    std::string body;       // raw visible text with block newlines
    std::string title;      // <title> content
    std::string first_h1;   // fallback title
    int exclude_depth = 0;
    int title_depth = 0;
    int h1_depth = 0;
    bool seen_h1 = false;

    size_t i = 0;
    while (i < in.size()) {
        if (in[i] != '<') {
            size_t next = in.find('<', i);
            if (next == std::string_view::npos) next = in.size();
            std::string_view raw = in.substr(i, next - i);
            std::string text = decode_entities(raw);
            if (title_depth > 0) {
                title += text;
            } else {
                if (h1_depth > 0 && !seen_h1) first_h1 += text;
                if (exclude_depth == 0) body += text;
            }
            i = next;
            continue;
        }
        // comments, doctype, processing instructions
        if (in.compare(i, 4, "<!--") == 0) {
            size_t end = in.find("-->", i + 4);
            i = (end == std::string_view::npos) ? in.size() : end + 3;
            continue;
        }
        if (i + 1 < in.size() && (in[i + 1] == '!' || in[i + 1] == '?')) {
            size_t end = in.find('>', i);
            i = (end == std::string_view::npos) ? in.size() : end + 1;
            continue;
        }
        if (i + 1 < in.size() && in[i + 1] != '/' &&
            !std::isalpha(static_cast<unsigned char>(in[i + 1]))) {
            body += '<';  // stray '<' treated as text
            ++i;
            continue;
        }

        TagToken tok;
        size_t after = parse_tag(in, i, tok);
        if (after == std::string_view::npos) break;  // truncated tag, stop
        i = after;
        if (tok.name.empty()) continue;

        // raw-text elements: skip to the matching close tag
        if (!tok.closing && !tok.self_closing && (tok.name == "script" || tok.name == "style")) {
            std::string close = "</" + tok.name;
            size_t end = i;
            while (end < in.size()) {
                size_t cand = in.find('<', end);
                if (cand == std::string_view::npos || cand + close.size() > in.size()) {
                    end = in.size();
                    break;
                }
                if (iequals(in.substr(cand, close.size()), close)) {
                    size_t gt = in.find('>', cand);
                    end = (gt == std::string_view::npos) ? in.size() : gt + 1;
                    break;
                }
                end = cand + 1;
            }
            i = end;
            continue;
        }

        bool is_block = block_tags().count(tok.name) > 0;
        if (is_block && exclude_depth == 0) body += '\n';

        if (excluded_tags().count(tok.name) > 0 && !tok.self_closing) {
            if (tok.closing) {
                if (exclude_depth > 0) --exclude_depth;
            } else {
                ++exclude_depth;
            }
            continue;
        }
        if (tok.name == "title") {
            if (tok.closing) {
                title_depth = std::max(0, title_depth - 1);
            } else if (!tok.self_closing) {
                ++title_depth;
            }
            continue;
        }
        if (tok.name == "h1") {
            if (tok.closing) {
                if (h1_depth > 0) {
                    --h1_depth;
                    if (h1_depth == 0) seen_h1 = true;
                }
            } else if (!tok.self_closing && !seen_h1) {
                ++h1_depth;
            }
            continue;
        }
    }

    ExtractedPage page;
    std::string chosen_title = util::collapse_whitespace(title);
    if (chosen_title.empty()) chosen_title = util::collapse_whitespace(first_h1);
    page.title = chosen_title;
    page.text = normalize_whitespace(body);
    return page;
}

}  // namespace ami::crawl
