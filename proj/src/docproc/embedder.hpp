// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "core/config.hpp"
#include "docproc/chunker.hpp"
#include "docproc/embed_cache.hpp"

namespace ami::doc {

struct EmbeddedChunk {
    Chunk chunk;
    std::vector<float> vector;  // unit L2 norm
    std::string model_id;
};

/// Token usage across backend calls (cache hits consume none).
struct EmbedUsage {
    long long prompt_tokens = 0;
    bool estimated = false;  // any call lacked a usage block
    int calls = 0;
};

/// OpenAI-compatible embeddings client (POST {base}/v1/embeddings) with an
/// optional on-disk cache consulted by (model, text). Vectors are
/// L2-normalized before they are returned or cached. Transport failures retry
/// with exponential backoff (0.5 s base, factor 2, 3 attempts). Thread-safe.
class EmbeddingClient {
public:
    EmbeddingClient(const EndpointConfig& endpoint, const std::string& cache_dir,
                    std::string http_proxy = "");

    /// Throws TransportError naming the text on exhausted retries.
    std::vector<float> embed_text(const std::string& text);

    /// One vector per chunk, concurrency bounded by max_concurrency.
    std::vector<EmbeddedChunk> embed_chunks(const std::vector<Chunk>& chunks,
                                            int max_concurrency);

    const std::string& model_id() const { return endpoint_.model; }
    EmbedUsage usage() const;

private:
    std::vector<float> call_backend(const std::string& text);

    EndpointConfig endpoint_;
    std::unique_ptr<EmbedCache> cache_;
    std::string http_proxy_;
    mutable std::mutex usage_mutex_;
    EmbedUsage usage_;
};

/// Scales to unit L2 norm; zero vectors are rejected.
std::vector<float> l2_normalize(std::vector<float> v);

}  // namespace ami::doc
