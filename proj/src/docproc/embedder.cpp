// SPDX-License-Identifier: Apache-2.0
#include "docproc/embedder.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cmath>
#include <thread>

#include "core/errors.hpp"
#include "net/guard.hpp"
#include "net/http.hpp"
#include "net/url.hpp"
#include "util/parallel.hpp"
#include "util/strings.hpp"

namespace ami::doc {

namespace {
using nlohmann::json;
}

std::vector<float> l2_normalize(std::vector<float> v) {
    double sum = 0.0;
    for (float x : v) sum += static_cast<double>(x) * static_cast<double>(x);
    double norm = std::sqrt(sum);
    if (!(norm > 0.0)) throw ValidationError("cannot normalize zero embedding vector");
    for (float& x : v) x = static_cast<float>(static_cast<double>(x) / norm);
    return v;
}

EmbeddingClient::EmbeddingClient(const EndpointConfig& endpoint, const std::string& cache_dir,
                                 std::string http_proxy)
    : endpoint_(endpoint), http_proxy_(std::move(http_proxy)) {
    if (endpoint_.base_url.empty())
        throw ConfigError("embedding backend not configured; set AMI_EMBED_BASE_URL");
    if (!cache_dir.empty()) cache_ = std::make_unique<EmbedCache>(cache_dir);
}

std::vector<float> EmbeddingClient::call_backend(const std::string& text) {
    json body{{"model", endpoint_.model}, {"input", json::array({text})}};
    net::HttpRequestOptions opts;
    opts.proxy = http_proxy_;
    if (!endpoint_.api_key.empty())
        opts.headers["Authorization"] = "Bearer " + endpoint_.api_key;
    net::Url url = net::parse_url(endpoint_.base_url + "/v1/embeddings");

    std::string last_error;
    for (int attempt = 0; attempt < 3; ++attempt) {
        if (attempt > 0) {
            auto delay = std::chrono::milliseconds(500) * (1 << (attempt - 1));
            std::this_thread::sleep_for(delay);
        }
        try {
            net::HttpResponse res = net::http_post_json(url, body.dump(), opts);
            if (res.status < 200 || res.status >= 300) {
                last_error = "HTTP " + std::to_string(res.status);
                continue;
            }
            json j = json::parse(res.body);
            const json& data = j.at("data").at(0).at("embedding");
            std::vector<float> vec;
            vec.reserve(data.size());
            for (const auto& x : data) vec.push_back(x.get<float>());
            {
                std::lock_guard<std::mutex> lock(usage_mutex_);
                ++usage_.calls;
                if (j.contains("usage") && j["usage"].contains("prompt_tokens")) {
                    usage_.prompt_tokens += j["usage"]["prompt_tokens"].get<long long>();
                } else {
                    usage_.prompt_tokens += static_cast<long long>(text.size() / 4);
                    usage_.estimated = true;
                }
            }
            return l2_normalize(std::move(vec));
        } catch (const net::GuardViolation&) {
            throw;
        } catch (const net::HttpError& e) {
            last_error = e.what();
        } catch (const json::exception& e) {
            last_error = std::string("bad response: ") + e.what();
        }
    }
    throw TransportError("embedding backend failed for text \"" +
                         util::elide(text, 40, "...") + "\": " + last_error);
}

std::vector<float> EmbeddingClient::embed_text(const std::string& text) {
    if (cache_) {
        if (auto hit = cache_->lookup(endpoint_.model, text)) return *hit;
    }
    std::vector<float> vec = call_backend(text);
    if (cache_) cache_->store(endpoint_.model, text, vec);
    return vec;
}

std::vector<EmbeddedChunk> EmbeddingClient::embed_chunks(const std::vector<Chunk>& chunks,
                                                         int max_concurrency) {
    std::vector<EmbeddedChunk> out(chunks.size());
    util::parallel_for(chunks.size(), max_concurrency, [&](size_t i) {
        EmbeddedChunk ec;
        ec.chunk = chunks[i];
        ec.vector = embed_text(chunks[i].text);
        ec.model_id = endpoint_.model;
        out[i] = std::move(ec);
    });
    return out;
}

EmbedUsage EmbeddingClient::usage() const {
    std::lock_guard<std::mutex> lock(usage_mutex_);
    return usage_;
}

}  // namespace ami::doc
