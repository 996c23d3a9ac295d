// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "agent/evidence.hpp"
#include "docproc/index.hpp"

namespace ami::agent {

struct BuiltContext {
    std::string text;  // top-k chunk bodies in similarity order, source-labeled
    std::vector<ChunkRef> chunk_refs;
};

/// Retrieves the top-k chunks for a query vector (optionally restricted to one
/// document) and assembles the context block. Empty candidate set returns an
/// empty BuiltContext; callers mark the assessment failed(no_chunks).
BuiltContext build_context(const doc::VectorIndex& index, const std::vector<float>& query_vector,
                           int k, const std::string* doc_hash,
                           const std::map<std::string, std::string>& url_by_hash);

}  // namespace ami::agent
