// SPDX-License-Identifier: Apache-2.0
#include "agent/llm.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <thread>

#include "core/errors.hpp"
#include "net/guard.hpp"
#include "net/http.hpp"
#include "net/url.hpp"

namespace ami::agent {

namespace {
using nlohmann::json;
}

ChatClient::ChatClient(const EndpointConfig& endpoint, double temperature, std::string http_proxy)
    : endpoint_(endpoint), temperature_(temperature), http_proxy_(std::move(http_proxy)) {
    if (endpoint_.base_url.empty())
        throw ConfigError("LLM backend not configured; set AMI_LLM_BASE_URL");
}

std::string ChatClient::complete(const std::vector<ChatMessage>& messages) {
    json msgs = json::array();
    for (const auto& m : messages) msgs.push_back({{"role", m.role}, {"content", m.content}});
    json body{{"model", endpoint_.model}, {"messages", std::move(msgs)},
              {"temperature", temperature_}};

    net::HttpRequestOptions opts;
    opts.proxy = http_proxy_;
    opts.timeout = std::chrono::milliseconds(120000);
    if (!endpoint_.api_key.empty())
        opts.headers["Authorization"] = "Bearer " + endpoint_.api_key;
    net::Url url = net::parse_url(endpoint_.base_url + "/v1/chat/completions");

    std::string last_error;
    for (int attempt = 0; attempt < 3; ++attempt) {
        if (attempt > 0) {
            auto delay = std::chrono::milliseconds(500) * (1 << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
        try {
            net::HttpResponse res = net::http_post_json(url, body.dump(), opts);
            if (res.status < 200 || res.status >= 300) {
                last_error = "HTTP " + std::to_string(res.status);
                continue;
            }
            json j = json::parse(res.body);
            std::string content =
                j.at("choices").at(0).at("message").at("content").get<std::string>();
            {
                std::lock_guard<std::mutex> lock(usage_mutex_);
                ++usage_.calls;
                if (j.contains("usage") && j["usage"].contains("prompt_tokens")) {
                    usage_.prompt_tokens += j["usage"].value("prompt_tokens", 0LL);
                    usage_.completion_tokens += j["usage"].value("completion_tokens", 0LL);
                } else {
                    long long chars = 0;
                    for (const auto& m : messages) chars += static_cast<long long>(m.content.size());
                    usage_.prompt_tokens += chars / 4;
                    usage_.completion_tokens += static_cast<long long>(content.size()) / 4;
                    usage_.estimated = true;
                }
            }
            return content;
        } catch (const net::GuardViolation&) {
            throw;
        } catch (const net::HttpError& e) {
            last_error = e.what();
        } catch (const json::exception& e) {
            last_error = std::string("bad response: ") + e.what();
        }
    }
    throw TransportError("chat backend failed after retries: " + last_error);
}

ChatUsage ChatClient::usage() const {
    std::lock_guard<std::mutex> lock(usage_mutex_);
    return usage_;
}

}  // namespace ami::agent
