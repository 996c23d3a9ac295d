// SPDX-License-Identifier: Apache-2.0
#include "simkit/mock_embedder.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <stdexcept>

#include "util/hash.hpp"

namespace ami::sim {

namespace {
using nlohmann::json;
}

std::vector<float> deterministic_unit_vector(const std::string& text, int dimension,
                                             uint64_t seed) {
    if (dimension < 2) throw std::invalid_argument("mock embedder: dimension must be >= 2");
    uint64_t state = seed ^ util::fnv1a64(text);
    std::vector<float> v(static_cast<size_t>(dimension));
    for (auto& x : v) {
        uint64_t bits = util::splitmix64(state);
        // top 53 bits -> [0,1) -> [-1,1)
        double u = static_cast<double>(bits >> 11) * (1.0 / 9007199254740992.0);
        x = static_cast<float>(2.0 * u - 1.0);
    }
    double norm_sq = 0.0;
    for (float x : v) norm_sq += static_cast<double>(x) * static_cast<double>(x);
    if (norm_sq == 0.0) {
        v[0] = 1.0f;
        return v;
    }
    double norm = std::sqrt(norm_sq);
    for (auto& x : v) x = static_cast<float>(static_cast<double>(x) / norm);
    return v;
}

MockEmbedder::MockEmbedder(int dimension, uint64_t seed) : dimension_(dimension), seed_(seed) {
    if (dimension < 2) throw std::invalid_argument("mock embedder: dimension must be >= 2");
    server_ = std::make_unique<LocalServer>([this](const SimRequest& r) { return handle(r); });
}

void MockEmbedder::fail_next_transport(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    transport_faults_ = n;
}

SimResponse MockEmbedder::handle(const SimRequest& req) {
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (transport_faults_ > 0) {
            --transport_faults_;
            return SimResponse{.drop_connection = true};
        }
    }
    if (req.path != "/v1/embeddings") return SimResponse{404, "application/json", "{}"};

    json body;
    try {
        body = json::parse(req.body);
    } catch (const json::parse_error&) {
        return SimResponse{400, "application/json", R"({"error":"bad json"})"};
    }
    std::vector<std::string> inputs;
    const json& input = body.at("input");
    if (input.is_string()) {
        inputs.push_back(input.get<std::string>());
    } else {
        for (const auto& x : input) inputs.push_back(x.get<std::string>());
    }

    long long prompt_tokens = 0;
    json data = json::array();
    for (size_t i = 0; i < inputs.size(); ++i) {
        prompt_tokens += static_cast<long long>(inputs[i].size() / 4);
        std::vector<float> vec = deterministic_unit_vector(inputs[i], dimension_, seed_);
        data.push_back(json{{"object", "embedding"},
                            {"index", i},
                            {"embedding", json(vec)}});
    }

    EmbedCallRecord record;
    record.inputs = inputs;
    record.prompt_tokens = prompt_tokens;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        record.index = static_cast<int>(calls_.size());
        calls_.push_back(record);
    }

    json res{{"object", "list"},
             {"data", std::move(data)},
             {"model", body.value("model", "mock-embed")},
             {"usage", {{"prompt_tokens", prompt_tokens}, {"total_tokens", prompt_tokens}}}};
    return SimResponse{200, "application/json", res.dump()};
}

std::vector<EmbedCallRecord> MockEmbedder::calls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_;
}

long long MockEmbedder::total_prompt_tokens() const {
    std::lock_guard<std::mutex> lock(mutex_);
    long long total = 0;
    for (const auto& c : calls_) total += c.prompt_tokens;
    return total;
}

}  // namespace ami::sim
