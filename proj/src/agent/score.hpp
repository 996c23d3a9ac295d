// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "agent/llm.hpp"

namespace ami::agent {

struct ScoreResponse {
    double score = 0.0;         // normalized to [0,1]
    std::string justification;  // non-empty on success
    std::string raw;            // verbatim model output
    int retries_used = 0;       // parse-repair round trips
    std::vector<std::string> warnings;  // e.g. out-of-range clamping
};

struct ScoreOutcome {
    bool ok = false;
    ScoreResponse response;
    std::string failure_reason;  // "parse_error" | "transport"
    std::string raw;             // last raw output on parse failure
};

/// Maps a raw score onto [0,1]: clamp to [scale_min, scale_max], then
/// (s - min) / (max - min).
double normalize_score(double raw, double scale_min, double scale_max, bool& clamped);

/// Strict {"score", "justification"} object with exactly those two keys;
/// a lenient pre-parse strips markdown code fences. Throws ParseError.
void parse_score_reply(const std::string& reply, double& score, std::string& justification);

/// JSON-contract call with parse-repair: on a malformed reply the model is
/// re-prompted with its own output and a correction instruction, up to
/// `parse_retries` times. Transport failures surface as failed(transport).
ScoreOutcome ask_score(ChatClient& chat, const std::string& context,
                       const std::string& question_prompt, double scale_min, double scale_max,
                       int parse_retries);

/// Same machinery for a prebuilt single user message (verdict calls).
ScoreOutcome ask_score_raw(ChatClient& chat, const std::string& system_prompt,
                           const std::string& user_prompt, double scale_min, double scale_max,
                           int parse_retries);

}  // namespace ami::agent
