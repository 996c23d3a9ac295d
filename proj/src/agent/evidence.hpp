// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "agent/score.hpp"
#include "core/identity.hpp"

namespace ami::agent {

using ChunkRef = std::pair<std::string, int>;  // (doc_hash, chunk index)

struct DocumentAssessment {
    std::string question_id;
    std::string doc_url;
    std::string doc_hash;
    bool ok = false;
    ScoreResponse response;      // valid when ok
    std::string failure_reason;  // "parse_error" | "transport" | "no_chunks"
    std::string raw;             // last raw output for failed parses
    std::vector<ChunkRef> chunk_refs;
};

/// All assessments of one screening, grouped by question, with per-question
/// arithmetic means over the successful scores (absent when none succeeded).
struct Evidence {
    Identity identity;
    std::map<std::string, std::vector<DocumentAssessment>> per_question;
    std::map<std::string, std::optional<double>> question_means;

    int successful_assessments() const;
    std::vector<const DocumentAssessment*> ordered() const;  // (question_id, doc_url)
};

/// Mean over successful scores in (question_id, doc_url) order; recomputed
/// from scratch, used both by the runner and as the aggregation contract.
std::map<std::string, std::optional<double>> compute_question_means(
    const std::map<std::string, std::vector<DocumentAssessment>>& per_question);

}  // namespace ami::agent
