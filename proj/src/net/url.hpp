// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace ami::net {

struct Url {
    std::string scheme;  // "http" or "https"
    std::string host;    // lowercase
    int port = 0;        // resolved (80/443 default)
    std::string path;    // begins with '/', query string included

    std::string origin() const;  // "scheme://host:port"
    std::string str() const;     // full URL
};

bool is_http_url(std::string_view s);

/// Parses an absolute http(s) URL. Throws std::invalid_argument otherwise.
Url parse_url(std::string_view s);

/// Lowercase extension of the URL path ("" when none), query ignored.
std::string path_extension(const Url& url);

std::string url_encode(std::string_view s);

}  // namespace ami::net
