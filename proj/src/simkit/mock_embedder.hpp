// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "simkit/server.hpp"

namespace ami::sim {

struct EmbedCallRecord {
    int index = 0;
    std::vector<std::string> inputs;
    long long prompt_tokens = 0;
};

/// Deterministic text -> unit vector, identical across runs and platforms
/// (hash-seeded splitmix stream, no std distributions).
std::vector<float> deterministic_unit_vector(const std::string& text, int dimension,
                                             uint64_t seed);

/// Serves the OpenAI embeddings wire shape with the deterministic mapping.
/// Records every call; optional fault injection.
class MockEmbedder {
public:
    MockEmbedder(int dimension, uint64_t seed);

    std::string base_url() const { return server_->base_url(); }
    std::string origin() const { return server_->base_url(); }

    void fail_next_transport(int n);  // next n requests drop mid-response

    std::vector<EmbedCallRecord> calls() const;
    long long total_prompt_tokens() const;

private:
    SimResponse handle(const SimRequest& req);

    int dimension_;
    uint64_t seed_;
    mutable std::mutex mutex_;
    std::vector<EmbedCallRecord> calls_;
    int transport_faults_ = 0;
    std::unique_ptr<LocalServer> server_;
};

}  // namespace ami::sim
