// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>

#include "net/url.hpp"

namespace ami::net {

struct HttpResponse {
    int status = 0;
    std::string body;
    std::string content_type;  // lowercased media type without parameters
};

// Distinct transport failure classes; callers map them to per-item statuses.
enum class HttpErrorKind {
    Timeout,
    Connection,
    Oversize,
    TooManyRedirects,
    Blocked,  // network guard
    Other,
};

struct HttpError : std::runtime_error {
    HttpErrorKind kind;
    HttpError(HttpErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct HttpRequestOptions {
    std::chrono::milliseconds timeout{15000};
    size_t max_body_bytes = 5 * 1024 * 1024;
    bool follow_redirects = true;
    std::map<std::string, std::string> headers;
    std::string user_agent = "amiscreen/1.0";
    std::string proxy;  // "host:port", from AMI_HTTP_PROXY when set
};

/// One chokepoint for all outgoing HTTP. Thread-safe (a fresh connection per
/// request). Consults NetworkGuard before connecting.
HttpResponse http_get(const Url& url, const HttpRequestOptions& opts = {});
HttpResponse http_post_json(const Url& url, const std::string& json_body,
                            const HttpRequestOptions& opts = {});

}  // namespace ami::net
