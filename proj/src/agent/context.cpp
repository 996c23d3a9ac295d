// SPDX-License-Identifier: Apache-2.0
#include "agent/context.hpp"

namespace ami::agent {

BuiltContext build_context(const doc::VectorIndex& index, const std::vector<float>& query_vector,
                           int k, const std::string* doc_hash,
                           const std::map<std::string, std::string>& url_by_hash) {
    std::vector<doc::SearchHit> hits = doc_hash
                                           ? index.search_in_doc(query_vector, k, *doc_hash)
                                           : index.search(query_vector, k);
    BuiltContext out;
    for (const auto& hit : hits) {
        const doc::Chunk& chunk = hit.entry->chunk;
        auto url_it = url_by_hash.find(chunk.doc_hash);
        std::string source = url_it == url_by_hash.end() ? chunk.doc_hash : url_it->second;
        out.text += "--- source: " + source + " ---\n";
        out.text += chunk.text;
        out.text += "\n";
        out.chunk_refs.emplace_back(chunk.doc_hash, chunk.index);
    }
    return out;
}

}  // namespace ami::agent
