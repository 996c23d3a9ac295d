// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "simkit/server.hpp"

namespace ami::sim {

enum class VerdictMode { MeanOfMeans, MaxQuestion };

/// Deterministic scoring rules: score = max weight among keywords present in
/// the prompt (default_score when none); the justification names the match.
/// Verdict prompts are recomputed from the per-document score lines they
/// carry, so aggregation is cross-checked end to end.
struct RuleBasedScorer {
    std::map<std::string, double> keyword_weights;  // lowercase keywords
    double default_score = 0.02;
    VerdictMode verdict_mode = VerdictMode::MeanOfMeans;
};

struct LlmFaults {
    int malformed_first = 0;       // first N replies are non-JSON prose
    std::set<int> malformed_at;    // additionally, by 0-based request index
    std::set<int> transport_at;    // these request indices drop mid-response
    int latency_ms = 0;            // fixed per-call latency
};

struct LlmCallRecord {
    int index = 0;
    bool is_verdict = false;
    bool faulted = false;  // malformed or dropped
    std::string model;
    std::string user_content;  // last user message
    long long prompt_tokens = 0;
    long long completion_tokens = 0;
};

/// Serves the OpenAI chat-completions wire shape, driven by RuleBasedScorer.
class MockLlm {
public:
    explicit MockLlm(RuleBasedScorer scorer, LlmFaults faults = {});

    std::string base_url() const { return server_->base_url(); }
    std::string origin() const { return server_->base_url(); }

    std::vector<LlmCallRecord> calls() const;
    int call_count() const;
    int verdict_calls() const;
    long long total_prompt_tokens() const;
    long long total_completion_tokens() const;

    /// Scoring rule applied to arbitrary text (exposed for test oracles).
    static std::pair<double, std::string> score_text(const RuleBasedScorer& scorer,
                                                     const std::string& text);

private:
    SimResponse handle(const SimRequest& req);

    RuleBasedScorer scorer_;
    LlmFaults faults_;
    mutable std::mutex mutex_;
    std::vector<LlmCallRecord> calls_;
    int replies_ = 0;
    std::unique_ptr<LocalServer> server_;
};

}  // namespace ami::sim
