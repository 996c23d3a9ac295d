// SPDX-License-Identifier: Apache-2.0
#include "verdict/verdict.hpp"

#include "core/errors.hpp"
#include "util/strings.hpp"

namespace ami::verdict {

namespace {

std::string render_prompt(const agent::Evidence& evidence, const Playbook& playbook,
                          size_t justification_cap) {
    std::string out = "Evidence collected while screening \"" + evidence.identity.name + "\".\n\n";
    for (const auto& q : playbook.questions) {
        out += "Question " + q.id + ": " + render_question(q, evidence.identity) + "\n";
        auto it = evidence.per_question.find(q.id);
        if (it != evidence.per_question.end()) {
            std::vector<const agent::DocumentAssessment*> sorted;
            for (const auto& a : it->second)
                if (a.ok) sorted.push_back(&a);
            std::sort(sorted.begin(), sorted.end(),
                      [](const agent::DocumentAssessment* a, const agent::DocumentAssessment* b) {
                          return a->doc_url < b->doc_url;
                      });
            for (const auto* a : sorted) {
                std::string justification = util::collapse_whitespace(a->response.justification);
                justification = util::elide(justification, justification_cap, "...[elided]");
                out += "- source: " + a->doc_url + " | score: " +
                       util::format_double(a->response.score) + " | justification: " +
                       justification + "\n";
            }
        }
        out += "\n";
    }
    out += "Question means:";
    for (const auto& q : playbook.questions) {
        auto it = evidence.question_means.find(q.id);
        if (it != evidence.question_means.end() && it->second)
            out += " " + q.id + "=" + util::format_double(*it->second);
    }
    out += "\nFinal question: " + playbook.verdict_prompt;
    return out;
}

}  // namespace

std::string build_verdict_prompt(const agent::Evidence& evidence, const Playbook& playbook,
                                 int budget_chars) {
    if (evidence.successful_assessments() == 0)
        throw ValidationError("cannot build verdict prompt: no successful assessments");
    size_t cap = 2048;
    std::string prompt = render_prompt(evidence, playbook, cap);
    while (static_cast<int>(prompt.size()) > budget_chars && cap > 16) {
        cap /= 2;
        prompt = render_prompt(evidence, playbook, cap);
    }
    return prompt;
}

VerdictOutcome generate_verdict(const agent::Evidence& evidence, const Playbook& playbook,
                                agent::ChatClient& chat, const RunConfig& config) {
    std::string prompt = build_verdict_prompt(evidence, playbook, config.verdict_prompt_budget);
    std::string system =
        "You are a compliance analyst issuing a final adverse-media risk verdict for a person. "
        "Consider all the evidence below. Reply with exactly one JSON object of the form "
        "{\"score\": number, \"justification\": string} and nothing else. The score must be a "
        "number between 0 and 1.";

    agent::ScoreOutcome outcome =
        agent::ask_score_raw(chat, system, prompt, 0.0, 1.0, config.parse_retries);
    VerdictOutcome out;
    if (!outcome.ok) {
        out.failure_reason = outcome.failure_reason;
        return out;
    }
    out.ok = true;
    out.verdict.ami_score = outcome.response.score;  // already clamped to [0,1]
    out.verdict.summary = outcome.response.justification;
    out.verdict.raw = outcome.response.raw;
    return out;
}

}  // namespace ami::verdict
