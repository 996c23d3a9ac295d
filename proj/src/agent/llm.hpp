// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "core/config.hpp"

namespace ami::agent {

struct ChatMessage {
    std::string role;  // "system" | "user" | "assistant"
    std::string content;
};

struct ChatUsage {
    long long prompt_tokens = 0;
    long long completion_tokens = 0;
    bool estimated = false;  // some call lacked a usage block
    int calls = 0;
};

/// OpenAI-compatible chat completions client
/// (POST {base}/v1/chat/completions). Transport failures retry with
/// exponential backoff (0.5 s base, factor 2, 3 attempts), then raise
/// TransportError. Thread-safe; usage accumulates across calls.
class ChatClient {
public:
    ChatClient(const EndpointConfig& endpoint, double temperature, std::string http_proxy = "");

    /// Returns the assistant message content verbatim.
    std::string complete(const std::vector<ChatMessage>& messages);

    const std::string& model_id() const { return endpoint_.model; }
    ChatUsage usage() const;

private:
    EndpointConfig endpoint_;
    double temperature_;
    std::string http_proxy_;
    mutable std::mutex usage_mutex_;
    ChatUsage usage_;
};

}  // namespace ami::agent
