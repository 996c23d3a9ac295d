// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "agent/evidence.hpp"
#include "agent/llm.hpp"
#include "core/config.hpp"
#include "core/playbook.hpp"

namespace ami::verdict {

struct Verdict {
    double ami_score = 0.0;  // clamped to [0,1]
    std::string summary;
    std::string raw;  // verbatim model output
};

struct VerdictOutcome {
    bool ok = false;
    Verdict verdict;
    std::string failure_reason;  // "parse_error" | "transport"
};

/// Enumerates every successful assessment in (question_id, doc_url) order —
/// question text, per-document score, justification — adds the question-means
/// line, and ends with the playbook verdict prompt verbatim. When the result
/// exceeds budget_chars, justification tails are elided (marker "...[elided]");
/// scores are never cut. Throws ValidationError on evidence with no successes.
std::string build_verdict_prompt(const agent::Evidence& evidence, const Playbook& playbook,
                                 int budget_chars);

/// Single LLM call through the same JSON-contract parse/repair machinery as
/// question scoring; ami_score clamped to [0,1].
VerdictOutcome generate_verdict(const agent::Evidence& evidence, const Playbook& playbook,
                                agent::ChatClient& chat, const RunConfig& config);

}  // namespace ami::verdict
