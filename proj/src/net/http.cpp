// SPDX-License-Identifier: Apache-2.0
#include "net/http.hpp"

#include <httplib.h>

#include <memory>

#include "net/guard.hpp"
#include "util/strings.hpp"

namespace ami::net {

namespace {

std::string media_type(const httplib::Response& res) {
    std::string ct = res.get_header_value("Content-Type");
    size_t semi = ct.find(';');
    if (semi != std::string::npos) ct.resize(semi);
    return util::trim(util::to_lower(ct));
}

HttpError classify(httplib::Error err, bool oversized) {
    using E = httplib::Error;
    if (oversized) return {HttpErrorKind::Oversize, "response body exceeds size cap"};
    switch (err) {
    case E::ConnectionTimeout:
        return {HttpErrorKind::Timeout, "connection timeout"};
    case E::Read:
    case E::Write:
        return {HttpErrorKind::Timeout, "request timed out or connection dropped"};
    case E::Connection:
        return {HttpErrorKind::Connection, "connection failed"};
    case E::ExceedRedirectCount:
        return {HttpErrorKind::TooManyRedirects, "too many redirects"};
    case E::Canceled:
        return {HttpErrorKind::Other, "request canceled"};
    default:
        return {HttpErrorKind::Other, std::string("transport error: ") + httplib::to_string(err)};
    }
}

std::unique_ptr<httplib::Client> make_client(const Url& url, const HttpRequestOptions& opts) {
    auto cli = std::make_unique<httplib::Client>(url.origin());
    cli->set_follow_location(opts.follow_redirects);
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(opts.timeout);
    auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(opts.timeout - secs);
    cli->set_connection_timeout(secs.count(), usecs.count());
    cli->set_read_timeout(secs.count(), usecs.count());
    cli->set_write_timeout(secs.count(), usecs.count());
    if (!opts.proxy.empty()) {
        size_t colon = opts.proxy.rfind(':');
        if (colon != std::string::npos) {
            cli->set_proxy(opts.proxy.substr(0, colon),
                           std::stoi(opts.proxy.substr(colon + 1)));
        }
    }
#ifdef CPPHTTPLIB_OPENSSL_SUPPORT
    cli->enable_server_certificate_verification(false);
#endif
    return cli;
}

HttpResponse run_request(const Url& url, const HttpRequestOptions& opts,
                         const std::string& method, const std::string& body,
                         const std::string& content_type) {
    NetworkGuard::check(url.origin());

    auto cli = make_client(url, opts);
    httplib::Headers headers;
    headers.emplace("User-Agent", opts.user_agent);
    for (const auto& [k, v] : opts.headers) headers.emplace(k, v);

    std::string received;
    bool oversized = false;
    auto sink = [&](const char* data, size_t len) {
        if (received.size() + len > opts.max_body_bytes) {
            oversized = true;
            return false;
        }
        received.append(data, len);
        return true;
    };

    httplib::Result result = [&] {
        if (method == "GET") {
            return cli->Get(url.path, headers, sink);
        }
        httplib::Request req;
        req.method = method;
        req.path = url.path;
        req.headers = headers;
        req.body = body;
        req.set_header("Content-Type", content_type);
        req.content_receiver = [&](const char* data, size_t len, uint64_t, uint64_t) {
            return sink(data, len);
        };
        return cli->send(std::move(req));
    }();

    if (!result) throw classify(result.error(), oversized);

    HttpResponse out;
    out.status = result->status;
    out.body = std::move(received);
    if (out.body.empty() && !result->body.empty()) out.body = result->body;
    out.content_type = media_type(*result);
    return out;
}

}  // namespace

HttpResponse http_get(const Url& url, const HttpRequestOptions& opts) {
    return run_request(url, opts, "GET", "", "");
}

HttpResponse http_post_json(const Url& url, const std::string& json_body,
                            const HttpRequestOptions& opts) {
    return run_request(url, opts, "POST", json_body, "application/json");
}

}  // namespace ami::net
