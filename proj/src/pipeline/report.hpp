// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "agent/evidence.hpp"
#include "core/identity.hpp"
#include "verdict/verdict.hpp"

namespace ami::pipeline {

/// Disposition of one search result: exactly one of
/// "filtered" | "fetch_failed" | "assessed".
struct DocRecord {
    std::string url;
    std::string title;
    int rank = 0;
    std::string disposition;
    std::string retrieved_at;    // empty for filtered results
    std::string status;          // "fetched" | "failed" | "skipped"
    std::string failure_reason;  // for fetch_failed
    std::string content_hash;    // for assessed
};

struct QuestionSummary {
    std::string question_id;
    std::optional<double> mean_score;  // absent when no assessment succeeded
    int assessed = 0;
    int failed = 0;
};

struct UsageTotals {
    long long prompt_tokens = 0;
    long long completion_tokens = 0;
    bool tokens_estimated = false;
    std::optional<double> estimated_cost;  // absent models in the price table => unknown
};

/// The end-to-end screening output (JSON schema_version 1, sorted keys).
struct ScreeningReport {
    Identity identity;
    std::string playbook_name;
    std::string config_digest;
    std::string status;  // "ok" | "no_evidence" | "verdict_failed" | "error"
    std::string error;   // for status=error
    std::vector<DocRecord> documents;
    std::vector<agent::DocumentAssessment> assessments;  // canonical order
    std::vector<QuestionSummary> question_summaries;
    std::optional<verdict::Verdict> verdict;
    long long timing_ms = 0;
    UsageTotals usage;
    std::string generated_at;  // RFC3339

    nlohmann::json to_json() const;
    std::string to_json_string() const;  // dump(2), sorted keys, trailing newline
};

}  // namespace ami::pipeline
