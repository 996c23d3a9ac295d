// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <string>

namespace ami::sim {

struct SimRequest {
    std::string method;
    std::string path;
    std::string body;
};

struct SimResponse {
    int status = 200;
    std::string content_type = "application/json";
    std::string body;
    bool drop_connection = false;  // simulate transport failure
};

/// Minimal localhost HTTP server on an ephemeral port, dispatching every
/// request to one handler. Runs on a background thread; stop() joins.
class LocalServer {
public:
    using Handler = std::function<SimResponse(const SimRequest&)>;

    explicit LocalServer(Handler handler);
    ~LocalServer();

    LocalServer(const LocalServer&) = delete;
    LocalServer& operator=(const LocalServer&) = delete;

    int port() const;
    std::string base_url() const;  // "http://127.0.0.1:<port>"
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace ami::sim
