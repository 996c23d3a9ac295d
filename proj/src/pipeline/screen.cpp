// SPDX-License-Identifier: Apache-2.0
#include "pipeline/screen.hpp"

#include <chrono>
#include <set>

#include "agent/runner.hpp"
#include "core/errors.hpp"
#include "crawler/crawl.hpp"
#include "docproc/chunker.hpp"
#include "net/guard.hpp"
#include "search/filter.hpp"
#include "search/google.hpp"
#include "search/query.hpp"
#include "search/snapshot.hpp"
#include "util/timeutil.hpp"

namespace ami::pipeline {

namespace {

std::optional<double> estimate_cost(const RunConfig& config, const agent::ChatUsage& chat,
                                    const doc::EmbedUsage& embed) {
    auto llm_price = config.price_table.find(config.llm.model);
    auto embed_price = config.price_table.find(config.embed.model);
    if (llm_price == config.price_table.end()) return std::nullopt;
    if (embed.calls > 0 && embed_price == config.price_table.end()) return std::nullopt;
    double cost = chat.prompt_tokens / 1000.0 * llm_price->second.input_per_1k +
                  chat.completion_tokens / 1000.0 * llm_price->second.output_per_1k;
    if (embed.calls > 0)
        cost += embed.prompt_tokens / 1000.0 * embed_price->second.input_per_1k;
    return cost;
}

}  // namespace

Backends Backends::resolve(const RunConfig& config) {
    Backends b;
    if (!config.snapshot_path.empty()) {
        auto snapshot =
            search::SearchSnapshot::load(std::filesystem::path(config.snapshot_path) / "search.json");
        b.provider = std::make_unique<search::SnapshotProvider>(std::move(snapshot));
    } else {
        b.provider = std::make_unique<search::GoogleSearchClient>(config.search, config.http_proxy);
    }
    return b;
}

ScreeningReport screen(const Identity& identity, const Playbook& playbook,
                       const RunConfig& config, Backends& backends) {
    auto t0 = std::chrono::steady_clock::now();

    ScreeningReport report;
    report.identity = identity;
    report.playbook_name = playbook.name;
    report.config_digest = config.digest();
    report.generated_at = util::rfc3339_now();

    // 1. search
    std::string query = search::build_query(identity);
    std::vector<search::SearchResult> results =
        backends.provider->search(query, config.top_n_results);

    // 2. filter
    std::vector<search::SearchResult> kept_results =
        search::filter_results(results, config.domain_blocklist, config.blocked_extensions);
    std::set<int> kept_ranks;
    for (const auto& r : kept_results) kept_ranks.insert(r.rank);

    // 3. crawl
    std::vector<crawl::WebDocument> documents = crawl::crawl_results(kept_results, config);
    std::map<std::string, const crawl::WebDocument*> doc_by_url;
    for (const auto& d : documents) doc_by_url.emplace(d.url, &d);

    for (const auto& r : results) {
        DocRecord record;
        record.url = r.url;
        record.title = r.title;
        record.rank = r.rank;
        if (!kept_ranks.count(r.rank)) {
            record.disposition = "filtered";
            record.status = "skipped";
        } else {
            const crawl::WebDocument* d = doc_by_url.at(r.url);
            record.retrieved_at = d->retrieved_at;
            if (d->fetched) {
                record.disposition = "assessed";
                record.status = "fetched";
                record.title = d->title.empty() ? r.title : d->title;
                record.content_hash = d->content_hash;
            } else {
                record.disposition = "fetch_failed";
                record.status = "failed";
                record.failure_reason = d->failure_reason;
            }
        }
        report.documents.push_back(std::move(record));
    }

    // 4. chunk + embed + index, then the playbook
    doc::EmbeddingClient embedder(config.embed, config.cache_dir, config.http_proxy);
    agent::ChatClient chat(config.llm, config.llm_temperature, config.http_proxy);

    doc::VectorIndex index;
    std::set<std::string> indexed_hashes;
    bool any_fetched = false;
    for (const auto& d : documents) {
        if (!d.fetched) continue;
        any_fetched = true;
        if (!indexed_hashes.insert(d.content_hash).second) continue;
        std::vector<doc::Chunk> chunks =
            doc::chunk_document(d.text, d.content_hash, config.chunk_chars(), config.overlap_chars());
        for (auto& ec : embedder.embed_chunks(chunks, config.max_concurrency))
            index.add(std::move(ec));
    }
    index.seal();

    agent::Evidence evidence;
    if (any_fetched) {
        evidence = agent::run_playbook(identity, playbook, documents, index, embedder, chat, config);
    } else {
        evidence.identity = identity;
        for (const auto& q : playbook.questions) evidence.per_question[q.id] = {};
        evidence.question_means = agent::compute_question_means(evidence.per_question);
    }

    for (const auto* a : evidence.ordered()) report.assessments.push_back(*a);
    for (const auto& q : playbook.questions) {
        QuestionSummary summary;
        summary.question_id = q.id;
        auto mean_it = evidence.question_means.find(q.id);
        if (mean_it != evidence.question_means.end()) summary.mean_score = mean_it->second;
        for (const auto& a : evidence.per_question.at(q.id)) (a.ok ? summary.assessed : summary.failed)++;
        report.question_summaries.push_back(std::move(summary));
    }

    // 5. verdict
    if (evidence.successful_assessments() == 0) {
        report.status = "no_evidence";
    } else {
        verdict::VerdictOutcome outcome = verdict::generate_verdict(evidence, playbook, chat, config);
        if (outcome.ok) {
            report.status = "ok";
            report.verdict = std::move(outcome.verdict);
        } else {
            report.status = "verdict_failed";
            report.error = outcome.failure_reason;
        }
    }

    agent::ChatUsage chat_usage = chat.usage();
    doc::EmbedUsage embed_usage = embedder.usage();
    report.usage.prompt_tokens = chat_usage.prompt_tokens + embed_usage.prompt_tokens;
    report.usage.completion_tokens = chat_usage.completion_tokens;
    report.usage.tokens_estimated = chat_usage.estimated || embed_usage.estimated;
    report.usage.estimated_cost = estimate_cost(config, chat_usage, embed_usage);

    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return report;
}

std::vector<ScreeningReport> screen_batch(const std::vector<Identity>& identities,
                                          const Playbook& playbook, const RunConfig& config,
                                          Backends& backends, const ProgressFn& progress) {
    std::vector<ScreeningReport> reports;
    reports.reserve(identities.size());
    for (size_t i = 0; i < identities.size(); ++i) {
        const Identity& identity = identities[i];
        if (progress)
            progress("screening " + std::to_string(i + 1) + "/" +
                     std::to_string(identities.size()) + ": " + identity.name);
        try {
            reports.push_back(screen(identity, playbook, config, backends));
        } catch (const net::GuardViolation&) {
            throw;
        } catch (const std::exception& e) {
            ScreeningReport report;
            report.identity = identity;
            report.playbook_name = playbook.name;
            report.config_digest = config.digest();
            report.generated_at = util::rfc3339_now();
            report.status = "error";
            report.error = e.what();
            reports.push_back(std::move(report));
            if (progress) progress("error: " + std::string(e.what()));
        }
    }
    return reports;
}

}  // namespace ami::pipeline
