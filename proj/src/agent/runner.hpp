// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "agent/context.hpp"
#include "agent/evidence.hpp"
#include "core/config.hpp"
#include "core/playbook.hpp"
#include "crawler/document.hpp"
#include "docproc/embedder.hpp"
#include "docproc/index.hpp"

namespace ami::agent {

/// Executes the playbook over the fetched documents: one assessment per
/// (question, document) pair, retrieval restricted to that document's chunks.
/// Pairs run concurrently up to max_concurrency; Evidence is identical either
/// way because assembly follows the canonical (question_id, doc_url) order and
/// means are folded over that order. Failures stay on individual assessments.
Evidence run_playbook(const Identity& identity, const Playbook& playbook,
                      const std::vector<crawl::WebDocument>& documents,
                      const doc::VectorIndex& index, doc::EmbeddingClient& embedder,
                      ChatClient& chat, const RunConfig& config);

}  // namespace ami::agent
