// SPDX-License-Identifier: Apache-2.0
#include "evalharness/protocol.hpp"

namespace ami::eval {

void compute_aggregates(EvalResult& result) {
    result.means.clear();
    result.scored_counts.clear();
    result.unscored_counts.clear();
    result.ecdf.clear();

    std::map<Population, std::vector<double>> scores;
    for (Population p : all_populations()) {
        result.scored_counts[p] = 0;
        result.unscored_counts[p] = 0;
    }
    for (const auto& s : result.per_sample) {
        if (s.ami_score) {
            scores[s.sample.population].push_back(*s.ami_score);
            result.scored_counts[s.sample.population]++;
        } else {
            result.unscored_counts[s.sample.population]++;
        }
    }
    for (const auto& [population, list] : scores) {
        result.means[population] = mean_of(list);
        result.ecdf[population] = compute_ecdf(list);
    }
    result.separations = score_separation(result.means);

    double wall_sum = 0.0;
    double token_sum = 0.0;
    double cost_sum = 0.0;
    bool all_costs = !result.per_sample.empty();
    for (const auto& s : result.per_sample) {
        wall_sum += static_cast<double>(s.timing_ms);
        token_sum += static_cast<double>(s.total_tokens);
        if (s.cost) cost_sum += *s.cost;
        else all_costs = false;
    }
    size_t n = result.per_sample.size();
    if (n > 0) {
        result.efficiency.mean_wall_ms = wall_sum / static_cast<double>(n);
        result.efficiency.mean_tokens = token_sum / static_cast<double>(n);
        if (all_costs) result.efficiency.mean_cost = cost_sum / static_cast<double>(n);
    }
}

EvalResult run_protocol(const std::vector<PopulationSample>& samples, const Playbook& playbook,
                        const RunConfig& config, pipeline::Backends& backends,
                        const pipeline::ProgressFn& progress) {
    std::vector<Identity> identities;
    identities.reserve(samples.size());
    for (const auto& s : samples) identities.push_back(s.identity);

    std::vector<pipeline::ScreeningReport> reports =
        pipeline::screen_batch(identities, playbook, config, backends, progress);

    EvalResult result;
    result.model_id = config.llm.model;
    for (size_t i = 0; i < samples.size(); ++i) {
        const pipeline::ScreeningReport& report = reports[i];
        SampleResult sr;
        sr.sample = samples[i];
        sr.status = report.status.empty() ? "ok" : report.status;
        if (report.verdict) {
            sr.ami_score = report.verdict->ami_score;
            sr.status = "ok";
        }
        sr.timing_ms = report.timing_ms;
        sr.total_tokens = report.usage.prompt_tokens + report.usage.completion_tokens;
        sr.cost = report.usage.estimated_cost;
        result.per_sample.push_back(std::move(sr));
    }
    compute_aggregates(result);
    return result;
}

}  // namespace ami::eval
