// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "core/config.hpp"
#include "core/playbook.hpp"
#include "pipeline/report.hpp"
#include "search/types.hpp"

namespace ami::pipeline {

using ProgressFn = std::function<void(const std::string&)>;

/// Resolved backends for one run: snapshot replay when config.snapshot_path is
/// set, live clients otherwise. Embedding/LLM endpoints always come from the
/// config (mock servers speak the same wire shapes).
struct Backends {
    std::unique_ptr<search::SearchProvider> provider;

    static Backends resolve(const RunConfig& config);
};

/// The five protocol steps: search -> filter -> crawl -> chunk/embed/index ->
/// playbook -> verdict, assembled into a ScreeningReport. Search failure
/// throws (nothing to score); everything downstream degrades per item.
ScreeningReport screen(const Identity& identity, const Playbook& playbook,
                       const RunConfig& config, Backends& backends);

/// One report per identity, input order kept, per-identity failures isolated
/// as status=error reports. Progress goes to the callback (diagnostic stream).
std::vector<ScreeningReport> screen_batch(const std::vector<Identity>& identities,
                                          const Playbook& playbook, const RunConfig& config,
                                          Backends& backends, const ProgressFn& progress = {});

}  // namespace ami::pipeline
