// SPDX-License-Identifier: Apache-2.0
#include "net/url.hpp"

#include <cstdio>
#include <stdexcept>

#include "util/strings.hpp"

namespace ami::net {

std::string Url::origin() const { return scheme + "://" + host + ":" + std::to_string(port); }

std::string Url::str() const {
    bool default_port = (scheme == "http" && port == 80) || (scheme == "https" && port == 443);
    std::string out = scheme + "://" + host;
    if (!default_port) out += ":" + std::to_string(port);
    out += path;
    return out;
}

bool is_http_url(std::string_view s) {
    return util::starts_with(s, "http://") || util::starts_with(s, "https://");
}

Url parse_url(std::string_view s) {
    Url url;
    std::string_view rest;
    if (util::starts_with(s, "http://")) {
        url.scheme = "http";
        url.port = 80;
        rest = s.substr(7);
    } else if (util::starts_with(s, "https://")) {
        url.scheme = "https";
        url.port = 443;
        rest = s.substr(8);
    } else {
        throw std::invalid_argument("not an absolute http(s) url: " + std::string(s));
    }
    size_t path_pos = rest.find_first_of("/?#");
    std::string_view authority = rest.substr(0, path_pos);
    if (path_pos == std::string_view::npos) {
        url.path = "/";
    } else if (rest[path_pos] == '/') {
        url.path = std::string(rest.substr(path_pos));
    } else if (rest[path_pos] == '?') {
        url.path = "/" + std::string(rest.substr(path_pos));
    } else {
        url.path = "/";  // fragment only
    }
    // strip fragment
    size_t frag = url.path.find('#');
    if (frag != std::string::npos) url.path.resize(frag);
    if (url.path.empty()) url.path = "/";

    size_t colon = authority.rfind(':');
    if (colon != std::string_view::npos) {
        std::string_view port_str = authority.substr(colon + 1);
        if (port_str.empty() || port_str.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("bad port in url: " + std::string(s));
        long p = std::stol(std::string(port_str));
        if (p < 1 || p > 65535) throw std::invalid_argument("port out of range: " + std::string(s));
        url.port = static_cast<int>(p);
        authority = authority.substr(0, colon);
    }
    if (authority.empty()) throw std::invalid_argument("empty host in url: " + std::string(s));
    url.host = util::to_lower(authority);
    return url;
}

std::string path_extension(const Url& url) {
    std::string_view p = url.path;
    size_t query = p.find('?');
    if (query != std::string_view::npos) p = p.substr(0, query);
    size_t slash = p.rfind('/');
    size_t dot = p.rfind('.');
    if (dot == std::string_view::npos || (slash != std::string_view::npos && dot < slash)) return "";
    return util::to_lower(p.substr(dot + 1));
}

std::string url_encode(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) {
        bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_' || c == '.' || c == '~';
        if (safe) {
            out.push_back(static_cast<char>(c));
        } else {
            char buf[4];
            std::snprintf(buf, sizeof(buf), "%%%02X", c);
            out += buf;
        }
    }
    return out;
}

}  // namespace ami::net
