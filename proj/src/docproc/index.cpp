// SPDX-License-Identifier: Apache-2.0
#include "docproc/index.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace ami::doc {

namespace {

double dot(const std::vector<float>& a, const std::vector<float>& b) {
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        sum += static_cast<double>(a[i]) * static_cast<double>(b[i]);
    return sum;
}

}  // namespace

void VectorIndex::add(EmbeddedChunk entry) {
    if (sealed_) throw ValidationError("vector index is sealed");
    if (entries_.empty()) {
        dimension_ = entry.vector.size();
        model_id_ = entry.model_id;
        if (dimension_ == 0) throw ValidationError("zero-dimension embedding");
    } else {
        if (entry.vector.size() != dimension_)
            throw ConfigError("embedding dimension mismatch: index has " +
                              std::to_string(dimension_) + ", got " +
                              std::to_string(entry.vector.size()));
        if (entry.model_id != model_id_)
            throw ConfigError("embedding model mismatch: index has \"" + model_id_ +
                              "\", got \"" + entry.model_id + "\"");
    }
    double norm = std::sqrt(dot(entry.vector, entry.vector));
    if (std::abs(norm - 1.0) > 1e-6)
        throw ValidationError("vector not unit-normalized (norm = " + std::to_string(norm) + ")");
    entries_.push_back(std::move(entry));
}

std::vector<SearchHit> VectorIndex::search_impl(const std::vector<float>& query, int k,
                                                const std::string* doc_filter) const {
    if (k < 1) throw ValidationError("index search: k must be >= 1");
    if (query.size() != dimension_)
        throw ConfigError("query dimension mismatch: index has " + std::to_string(dimension_) +
                          ", got " + std::to_string(query.size()));

    std::vector<SearchHit> hits;
    hits.reserve(entries_.size());
    for (const auto& e : entries_) {
        if (doc_filter && e.chunk.doc_hash != *doc_filter) continue;
        double sim = dot(query, e.vector);
        sim = std::min(1.0, std::max(-1.0, sim));
        hits.push_back(SearchHit{&e, sim});
    }
    auto better = [](const SearchHit& a, const SearchHit& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        if (a.entry->chunk.doc_hash != b.entry->chunk.doc_hash)
            return a.entry->chunk.doc_hash < b.entry->chunk.doc_hash;
        return a.entry->chunk.index < b.entry->chunk.index;
    };
    size_t take = std::min(static_cast<size_t>(k), hits.size());
    std::partial_sort(hits.begin(), hits.begin() + static_cast<long>(take), hits.end(), better);
    hits.resize(take);
    return hits;
}

std::vector<SearchHit> VectorIndex::search(const std::vector<float>& query, int k) const {
    return search_impl(query, k, nullptr);
}

std::vector<SearchHit> VectorIndex::search_in_doc(const std::vector<float>& query, int k,
                                                  const std::string& doc_hash) const {
    return search_impl(query, k, &doc_hash);
}

}  // namespace ami::doc
