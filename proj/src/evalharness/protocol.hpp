// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>

#include "evalharness/metrics.hpp"
#include "pipeline/screen.hpp"

namespace ami::eval {

struct SampleResult {
    PopulationSample sample;
    std::optional<double> ami_score;  // absent: no_evidence or error
    std::string status;               // report status
    long long timing_ms = 0;
    long long total_tokens = 0;
    std::optional<double> cost;
};

struct Efficiency {
    double mean_wall_ms = 0.0;
    double mean_tokens = 0.0;
    std::optional<double> mean_cost;  // absent when any screening lacked a cost
};

struct EvalResult {
    std::vector<SampleResult> per_sample;  // input order
    std::map<Population, double> means;    // populations with >= 1 scored sample
    std::map<Population, int> scored_counts;
    std::map<Population, int> unscored_counts;  // no_evidence + errors
    std::vector<Separation> separations;
    std::map<Population, std::vector<std::pair<double, double>>> ecdf;
    Efficiency efficiency;
    std::string model_id;
};

/// Screens every sample through the pipeline and computes means, separations,
/// per-population ECDFs, and efficiency aggregates. Per-sample failures are
/// recorded and counted, never fatal.
EvalResult run_protocol(const std::vector<PopulationSample>& samples, const Playbook& playbook,
                        const RunConfig& config, pipeline::Backends& backends,
                        const pipeline::ProgressFn& progress = {});

/// Metric recomputation from per-sample scores (used standalone in tests).
void compute_aggregates(EvalResult& result);

}  // namespace ami::eval
