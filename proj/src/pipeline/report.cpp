// SPDX-License-Identifier: Apache-2.0
#include "pipeline/report.hpp"

namespace ami::pipeline {

namespace {
using nlohmann::json;

json identity_json(const Identity& id) {
    json j;
    j["name"] = id.name;
    j["date_of_birth"] = id.date_of_birth ? json(*id.date_of_birth) : json(nullptr);
    j["attributes"] = id.attributes;
    return j;
}

json assessment_json(const agent::DocumentAssessment& a) {
    json j;
    j["question_id"] = a.question_id;
    j["doc_url"] = a.doc_url;
    j["doc_hash"] = a.doc_hash;
    json refs = json::array();
    for (const auto& [hash, index] : a.chunk_refs)
        refs.push_back({{"doc_hash", hash}, {"index", index}});
    j["chunk_refs"] = std::move(refs);
    if (a.ok) {
        j["status"] = "ok";
        j["score"] = a.response.score;
        j["justification"] = a.response.justification;
        j["raw"] = a.response.raw;
        j["retries_used"] = a.response.retries_used;
        j["warnings"] = a.response.warnings;
    } else {
        j["status"] = "failed";
        j["failure_reason"] = a.failure_reason;
        if (!a.raw.empty()) j["raw"] = a.raw;
    }
    return j;
}

json document_json(const DocRecord& d) {
    json j;
    j["url"] = d.url;
    j["title"] = d.title;
    j["rank"] = d.rank;
    j["disposition"] = d.disposition;
    j["status"] = d.status;
    if (!d.retrieved_at.empty()) j["retrieved_at"] = d.retrieved_at;
    if (!d.failure_reason.empty()) j["failure_reason"] = d.failure_reason;
    if (!d.content_hash.empty()) j["content_hash"] = d.content_hash;
    return j;
}
}  // namespace

json ScreeningReport::to_json() const {
    json j;
    j["schema_version"] = 1;
    j["identity"] = identity_json(identity);
    j["playbook_name"] = playbook_name;
    j["config_digest"] = config_digest;

    json docs = json::array();
    for (const auto& d : documents) docs.push_back(document_json(d));
    j["documents"] = std::move(docs);

    json assessments_json = json::array();
    for (const auto& a : assessments) assessments_json.push_back(assessment_json(a));
    j["assessments"] = std::move(assessments_json);

    json summaries = json::array();
    for (const auto& s : question_summaries) {
        json sj;
        sj["question_id"] = s.question_id;
        sj["mean_score"] = s.mean_score ? json(*s.mean_score) : json(nullptr);
        sj["assessed"] = s.assessed;
        sj["failed"] = s.failed;
        summaries.push_back(std::move(sj));
    }
    j["question_summaries"] = std::move(summaries);

    if (verdict) {
        j["verdict"] = {{"ami_score", verdict->ami_score},
                        {"summary", verdict->summary},
                        {"raw", verdict->raw}};
    } else {
        j["status"] = status;
        if (!error.empty()) j["error"] = error;
    }

    j["timing_ms"] = timing_ms;
    json usage_json;
    usage_json["prompt_tokens"] = usage.prompt_tokens;
    usage_json["completion_tokens"] = usage.completion_tokens;
    usage_json["tokens_estimated"] = usage.tokens_estimated;
    usage_json["estimated_cost"] = usage.estimated_cost ? json(*usage.estimated_cost) : json(nullptr);
    j["usage"] = std::move(usage_json);
    j["generated_at"] = generated_at;
    return j;
}

std::string ScreeningReport::to_json_string() const { return to_json().dump(2) + "\n"; }

}  // namespace ami::pipeline
