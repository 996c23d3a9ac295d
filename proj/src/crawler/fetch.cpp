// SPDX-License-Identifier: Apache-2.0
#include "crawler/fetch.hpp"

#include "net/guard.hpp"
#include "net/http.hpp"
#include "util/strings.hpp"
#include "util/timeutil.hpp"

namespace ami::crawl {

namespace {

bool is_textual(const std::string& media_type) {
    if (media_type.empty()) return true;  // unspecified: assume text
    return util::starts_with(media_type, "text/") || media_type == "application/xhtml+xml" ||
           media_type == "application/xml" || media_type == "application/json";
}

std::string reason_for(const net::HttpError& e) {
    switch (e.kind) {
    case net::HttpErrorKind::Timeout: return "timeout";
    case net::HttpErrorKind::Connection: return "connection_failed";
    case net::HttpErrorKind::Oversize: return "oversize_body";
    case net::HttpErrorKind::TooManyRedirects: return "too_many_redirects";
    default: return "transport_error";
    }
}

}  // namespace

FetchOutcome fetch_url(const std::string& url, const RunConfig& config) {
    FetchOutcome out;
    net::Url parsed;
    try {
        parsed = net::parse_url(url);
    } catch (const std::invalid_argument&) {
        out.failure_reason = "invalid_url";
        return out;
    }

    net::HttpRequestOptions opts;
    opts.timeout = std::chrono::milliseconds(config.fetch_timeout_ms);
    opts.max_body_bytes = config.max_document_bytes;
    opts.proxy = config.http_proxy;
    opts.headers["Accept"] = "text/html,application/xhtml+xml";

    net::HttpResponse res;
    try {
        res = net::http_get(parsed, opts);
    } catch (const net::GuardViolation&) {
        throw;  // offline-mode violation is a hard error, not a page failure
    } catch (const net::HttpError& e) {
        out.failure_reason = reason_for(e);
        return out;
    }

    if (res.status < 200 || res.status >= 300) {
        out.failure_reason = "http_" + std::to_string(res.status);
        return out;
    }
    if (!is_textual(res.content_type)) {
        out.failure_reason = "non_text_content";
        return out;
    }
    out.ok = true;
    out.page.url = url;
    out.page.status = res.status;
    out.page.content_type = res.content_type;
    out.page.body = std::move(res.body);
    out.page.fetched_at = util::rfc3339_now();
    return out;
}

}  // namespace ami::crawl
