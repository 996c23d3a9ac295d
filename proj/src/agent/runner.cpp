// SPDX-License-Identifier: Apache-2.0
#include "agent/runner.hpp"

#include <algorithm>
#include <set>

#include "core/errors.hpp"
#include "util/parallel.hpp"

namespace ami::agent {

int Evidence::successful_assessments() const {
    int n = 0;
    for (const auto& [id, list] : per_question)
        for (const auto& a : list) n += a.ok ? 1 : 0;
    return n;
}

std::vector<const DocumentAssessment*> Evidence::ordered() const {
    std::vector<const DocumentAssessment*> out;
    for (const auto& [id, list] : per_question)
        for (const auto& a : list) out.push_back(&a);
    std::sort(out.begin(), out.end(), [](const DocumentAssessment* a, const DocumentAssessment* b) {
        if (a->question_id != b->question_id) return a->question_id < b->question_id;
        return a->doc_url < b->doc_url;
    });
    return out;
}

std::map<std::string, std::optional<double>> compute_question_means(
    const std::map<std::string, std::vector<DocumentAssessment>>& per_question) {
    std::map<std::string, std::optional<double>> means;
    for (const auto& [id, list] : per_question) {
        std::vector<const DocumentAssessment*> sorted;
        for (const auto& a : list) sorted.push_back(&a);
        std::sort(sorted.begin(), sorted.end(),
                  [](const DocumentAssessment* a, const DocumentAssessment* b) {
                      return a->doc_url < b->doc_url;
                  });
        double sum = 0.0;
        int n = 0;
        for (const auto* a : sorted) {
            if (!a->ok) continue;
            sum += a->response.score;
            ++n;
        }
        means[id] = n == 0 ? std::optional<double>{} : std::optional<double>{sum / n};
    }
    return means;
}

Evidence run_playbook(const Identity& identity, const Playbook& playbook,
                      const std::vector<crawl::WebDocument>& documents,
                      const doc::VectorIndex& index, doc::EmbeddingClient& embedder,
                      ChatClient& chat, const RunConfig& config) {
    Evidence evidence;
    evidence.identity = identity;

    // unique fetched documents, first occurrence per URL
    std::vector<const crawl::WebDocument*> fetched;
    std::set<std::string> seen_urls;
    std::map<std::string, std::string> url_by_hash;
    for (const auto& d : documents) {
        if (!d.fetched) continue;
        if (!seen_urls.insert(d.url).second) continue;
        fetched.push_back(&d);
        url_by_hash.emplace(d.content_hash, d.url);
    }

    for (const auto& q : playbook.questions) evidence.per_question[q.id] = {};

    if (fetched.empty()) {
        evidence.question_means = compute_question_means(evidence.per_question);
        return evidence;
    }

    // one rendered prompt + one query embedding per question
    std::map<std::string, std::string> prompt_by_question;
    std::map<std::string, std::vector<float>> query_by_question;
    for (const auto& q : playbook.questions) {
        std::string prompt = render_question(q, identity);
        query_by_question[q.id] = embedder.embed_text(prompt);
        prompt_by_question[q.id] = std::move(prompt);
    }

    struct Task {
        const Question* question;
        const crawl::WebDocument* document;
    };
    std::vector<Task> tasks;
    for (const auto& q : playbook.questions)
        for (const auto* d : fetched) tasks.push_back({&q, d});
    std::sort(tasks.begin(), tasks.end(), [](const Task& a, const Task& b) {
        if (a.question->id != b.question->id) return a.question->id < b.question->id;
        return a.document->url < b.document->url;
    });

    std::vector<DocumentAssessment> results(tasks.size());
    util::parallel_for(tasks.size(), config.max_concurrency, [&](size_t i) {
        const Task& task = tasks[i];
        DocumentAssessment a;
        a.question_id = task.question->id;
        a.doc_url = task.document->url;
        a.doc_hash = task.document->content_hash;

        BuiltContext context = build_context(index, query_by_question.at(task.question->id),
                                             config.top_k_chunks, &a.doc_hash, url_by_hash);
        if (context.chunk_refs.empty()) {
            a.failure_reason = "no_chunks";
            results[i] = std::move(a);
            return;
        }
        a.chunk_refs = std::move(context.chunk_refs);

        ScoreOutcome outcome =
            ask_score(chat, context.text, prompt_by_question.at(task.question->id),
                      task.question->scale_min, task.question->scale_max, config.parse_retries);
        if (outcome.ok) {
            a.ok = true;
            a.response = std::move(outcome.response);
        } else {
            a.failure_reason = outcome.failure_reason;
            a.raw = outcome.raw;
        }
        results[i] = std::move(a);
    });

    for (auto& a : results) evidence.per_question[a.question_id].push_back(std::move(a));
    evidence.question_means = compute_question_means(evidence.per_question);
    return evidence;
}

}  // namespace ami::agent
