// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "docproc/embedder.hpp"

namespace ami::doc {

struct SearchHit {
    const EmbeddedChunk* entry = nullptr;
    double similarity = 0.0;  // cosine, in [-1, 1]
};

/// Exact flat cosine index. Entries are unit vectors, so cosine = dot product
/// (accumulated in double, in insertion component order). Single-writer while
/// building; immutable and freely queryable after seal().
class VectorIndex {
public:
    /// Validates dimension/model consistency and unit norm (1 +- 1e-6).
    void add(EmbeddedChunk entry);
    void seal() { sealed_ = true; }
    bool sealed() const { return sealed_; }

    size_t size() const { return entries_.size(); }
    size_t dimension() const { return dimension_; }
    const std::vector<EmbeddedChunk>& entries() const { return entries_; }

    /// Exact top-k by cosine similarity; ties break by (doc_hash, chunk index)
    /// ascending. Returns min(k, candidates) hits.
    std::vector<SearchHit> search(const std::vector<float>& query, int k) const;

    /// Same, restricted to entries of one document.
    std::vector<SearchHit> search_in_doc(const std::vector<float>& query, int k,
                                         const std::string& doc_hash) const;

private:
    std::vector<SearchHit> search_impl(const std::vector<float>& query, int k,
                                       const std::string* doc_filter) const;

    std::vector<EmbeddedChunk> entries_;
    size_t dimension_ = 0;
    std::string model_id_;
    bool sealed_ = false;
};

}  // namespace ami::doc
