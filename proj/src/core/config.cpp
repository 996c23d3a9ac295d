// SPDX-License-Identifier: Apache-2.0
#include "core/config.hpp"

#include <cmath>
#include <cstdlib>

#include "core/errors.hpp"
#include "util/hash.hpp"

namespace ami {

namespace {
using nlohmann::json;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return (v && *v) ? std::string(v) : fallback;
}

template <typename T>
void take(const json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

void take_endpoint(const json& j, const char* key, EndpointConfig& out) {
    if (!j.contains(key)) return;
    const json& e = j.at(key);
    take(e, "base_url", out.base_url);
    take(e, "api_key", out.api_key);
    take(e, "model", out.model);
    take(e, "engine_id", out.engine_id);
}

json endpoint_json(const EndpointConfig& e, bool mask_secrets) {
    json out;
    out["base_url"] = e.base_url;
    out["api_key"] = mask_secrets ? (e.api_key.empty() ? "" : "<set>") : e.api_key;
    out["model"] = e.model;
    out["engine_id"] = e.engine_id;
    return out;
}
}  // namespace

const std::vector<std::string>& default_domain_blocklist() {
    // Social networks and people-directory aggregators; overridable in config.
    static const std::vector<std::string> list = {
        "facebook.com",    "twitter.com",   "x.com",          "instagram.com",
        "*.linkedin.com",  "linkedin.com",  "tiktok.com",     "youtube.com",
        "pinterest.com",   "reddit.com",    "whitepages.com", "spokeo.com",
        "beenverified.com", "mylife.com",   "radaris.com",
    };
    return list;
}

RunConfig::RunConfig() {
    domain_blocklist = default_domain_blocklist();
    blocked_extensions = {"zip", "exe", "mp4"};
    search.base_url = "https://www.googleapis.com";
}

int RunConfig::chunk_chars() const {
    return static_cast<int>(std::lround(chunk_size_tokens * chars_per_token));
}

int RunConfig::overlap_chars() const {
    return static_cast<int>(std::lround(chunk_overlap_fraction * chunk_chars()));
}

void RunConfig::validate() const {
    if (top_n_results < 1) throw ConfigError("top_n_results must be >= 1");
    if (top_k_chunks < 1) throw ConfigError("top_k_chunks must be >= 1");
    if (chunk_size_tokens < 1) throw ConfigError("chunk_size_tokens must be >= 1");
    if (!(chunk_overlap_fraction > 0.0 && chunk_overlap_fraction < 1.0))
        throw ConfigError("chunk_overlap_fraction must be in (0,1)");
    if (chunk_overlap_fraction * chunk_size_tokens < 1.0)
        throw ConfigError("chunk_overlap_fraction x chunk_size_tokens must cover at least 1 token");
    if (chars_per_token <= 0.0) throw ConfigError("chars_per_token must be positive");
    if (max_concurrency < 1) throw ConfigError("max_concurrency must be >= 1");
    if (llm_temperature < 0.0) throw ConfigError("llm_temperature must be >= 0");
    if (parse_retries < 0) throw ConfigError("parse_retries must be >= 0");
    if (overlap_chars() >= chunk_chars())
        throw ConfigError("overlap must be smaller than the chunk window");
}

void RunConfig::apply_json(const json& j) {
    take(j, "top_n_results", top_n_results);
    take(j, "top_k_chunks", top_k_chunks);
    take(j, "chunk_size_tokens", chunk_size_tokens);
    take(j, "chunk_overlap_fraction", chunk_overlap_fraction);
    take(j, "chars_per_token", chars_per_token);
    take(j, "max_concurrency", max_concurrency);
    take(j, "llm_temperature", llm_temperature);
    take(j, "parse_retries", parse_retries);
    take(j, "domain_blocklist", domain_blocklist);
    take(j, "blocked_extensions", blocked_extensions);
    take(j, "snapshot_path", snapshot_path);
    take_endpoint(j, "search", search);
    take_endpoint(j, "embed", embed);
    take_endpoint(j, "llm", llm);
    take(j, "fetch_timeout_ms", fetch_timeout_ms);
    take(j, "max_document_bytes", max_document_bytes);
    take(j, "verdict_prompt_budget", verdict_prompt_budget);
    take(j, "cache_dir", cache_dir);
    take(j, "honor_robots", honor_robots);
    take(j, "http_proxy", http_proxy);
    take(j, "backend_profile", backend_profile);
    if (j.contains("price_table")) {
        price_table.clear();
        for (const auto& [model, entry] : j.at("price_table").items()) {
            PriceEntry p;
            take(entry, "input_per_1k", p.input_per_1k);
            take(entry, "output_per_1k", p.output_per_1k);
            price_table[model] = p;
        }
    }
}

void RunConfig::apply_env() {
    search.api_key = env_or("AMI_SEARCH_API_KEY", search.api_key);
    search.engine_id = env_or("AMI_SEARCH_ENGINE_ID", search.engine_id);
    search.base_url = env_or("AMI_SEARCH_BASE_URL", search.base_url);
    embed.base_url = env_or("AMI_EMBED_BASE_URL", embed.base_url);
    embed.api_key = env_or("AMI_EMBED_API_KEY", embed.api_key);
    embed.model = env_or("AMI_EMBED_MODEL", embed.model);
    llm.base_url = env_or("AMI_LLM_BASE_URL", llm.base_url);
    llm.api_key = env_or("AMI_LLM_API_KEY", llm.api_key);
    llm.model = env_or("AMI_LLM_MODEL", llm.model);
    http_proxy = env_or("AMI_HTTP_PROXY", http_proxy);
}

void RunConfig::apply_profile(const std::string& name) {
    if (name == "api") {
        chunk_size_tokens = 1000;
    } else if (name == "local") {
        chunk_size_tokens = 500;
    } else {
        throw ConfigError("unknown backend profile \"" + name + "\" (expected api or local)");
    }
    backend_profile = name;
}

nlohmann::json RunConfig::to_json(bool mask_secrets) const {
    json j;
    j["top_n_results"] = top_n_results;
    j["top_k_chunks"] = top_k_chunks;
    j["chunk_size_tokens"] = chunk_size_tokens;
    j["chunk_overlap_fraction"] = chunk_overlap_fraction;
    j["chars_per_token"] = chars_per_token;
    j["max_concurrency"] = max_concurrency;
    j["llm_temperature"] = llm_temperature;
    j["parse_retries"] = parse_retries;
    j["domain_blocklist"] = domain_blocklist;
    j["blocked_extensions"] = blocked_extensions;
    j["snapshot_path"] = snapshot_path;
    j["search"] = endpoint_json(search, mask_secrets);
    j["embed"] = endpoint_json(embed, mask_secrets);
    j["llm"] = endpoint_json(llm, mask_secrets);
    j["fetch_timeout_ms"] = fetch_timeout_ms;
    j["max_document_bytes"] = max_document_bytes;
    j["verdict_prompt_budget"] = verdict_prompt_budget;
    j["cache_dir"] = cache_dir;
    j["honor_robots"] = honor_robots;
    j["http_proxy"] = http_proxy;
    j["backend_profile"] = backend_profile;
    json pt = json::object();
    for (const auto& [model, p] : price_table) {
        pt[model] = {{"input_per_1k", p.input_per_1k}, {"output_per_1k", p.output_per_1k}};
    }
    j["price_table"] = pt;
    return j;
}

std::string RunConfig::digest() const { return util::sha256_hex(to_json(true).dump()); }

}  // namespace ami
