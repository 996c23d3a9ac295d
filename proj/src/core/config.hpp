// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <nlohmann/json.hpp>

#include <map>
#include <string>
#include <vector>

namespace ami {

struct EndpointConfig {
    std::string base_url;
    std::string api_key;
    std::string model;      // embedding / chat model id
    std::string engine_id;  // search engine id (cx)
};

struct PriceEntry {
    double input_per_1k = 0.0;
    double output_per_1k = 0.0;
};

/// Effective run configuration. Immutable once resolved; shared across tasks.
struct RunConfig {
    int top_n_results = 10;
    int top_k_chunks = 5;
    int chunk_size_tokens = 1000;
    double chunk_overlap_fraction = 0.10;
    double chars_per_token = 4.0;
    int max_concurrency = 4;
    double llm_temperature = 0.0;
    int parse_retries = 2;
    std::vector<std::string> domain_blocklist;   // host suffix patterns
    std::vector<std::string> blocked_extensions; // url path extensions
    std::string snapshot_path;                   // set => replay mode, no live fetches

    EndpointConfig search;
    EndpointConfig embed;
    EndpointConfig llm;

    int fetch_timeout_ms = 15000;
    size_t max_document_bytes = 5 * 1024 * 1024;
    int verdict_prompt_budget = 24000;
    std::string cache_dir;  // embedding cache; empty disables
    bool honor_robots = true;
    std::string http_proxy;
    std::string backend_profile = "api";
    std::map<std::string, PriceEntry> price_table;  // keyed by model id

    RunConfig();

    /// Chunk window in characters: chunk_size_tokens x chars_per_token.
    int chunk_chars() const;
    /// round(chunk_overlap_fraction x chunk_chars).
    int overlap_chars() const;

    void validate() const;  // throws ConfigError

    /// Applies only the keys present in `j` (config-file / flag merge).
    void apply_json(const nlohmann::json& j);

    /// AMI_* environment overrides.
    void apply_env();

    /// "api" (1000-token chunks) or "local" (500-token chunks).
    void apply_profile(const std::string& name);

    /// Full effective config; secrets reduced to set/unset markers when masked.
    nlohmann::json to_json(bool mask_secrets = true) const;

    /// sha256 of the canonical (sorted-keys, masked) serialization.
    std::string digest() const;
};

const std::vector<std::string>& default_domain_blocklist();

}  // namespace ami
