// SPDX-License-Identifier: Apache-2.0
#include "search/snapshot.hpp"

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "net/url.hpp"
#include "search/query.hpp"
#include "util/fsutil.hpp"
#include "util/timeutil.hpp"

namespace ami::search {

namespace {
using nlohmann::json;
constexpr int kSchemaVersion = 1;

json result_to_json(const SearchResult& r) {
    return json{{"rank", r.rank}, {"snippet", r.snippet}, {"title", r.title}, {"url", r.url}};
}

SearchResult result_from_json(const json& j) {
    SearchResult r;
    r.url = j.at("url").get<std::string>();
    r.title = j.at("title").get<std::string>();
    r.snippet = j.at("snippet").get<std::string>();
    r.rank = j.at("rank").get<int>();
    return r;
}
}  // namespace

bool operator==(const SearchResult& a, const SearchResult& b) {
    return a.url == b.url && a.title == b.title && a.snippet == b.snippet && a.rank == b.rank;
}

std::string SearchSnapshot::to_json_string() const {
    json entries_json = json::object();
    for (const auto& [query, results] : entries) {
        json list = json::array();
        for (const auto& r : results) list.push_back(result_to_json(r));
        entries_json[query] = std::move(list);
    }
    json j{{"created_at", created_at},
           {"entries", std::move(entries_json)},
           {"provider_id", provider_id},
           {"schema_version", kSchemaVersion}};
    return j.dump(2) + "\n";
}

SearchSnapshot SearchSnapshot::from_json_string(const std::string& text,
                                                const std::string& origin) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("snapshot " + origin + ": " + e.what());
    }
    try {
        SearchSnapshot snap;
        snap.provider_id = j.at("provider_id").get<std::string>();
        snap.created_at = j.at("created_at").get<std::string>();
        for (const auto& [query, list] : j.at("entries").items()) {
            std::vector<SearchResult> results;
            for (const auto& item : list) results.push_back(result_from_json(item));
            snap.entries[query] = std::move(results);
        }
        return snap;
    } catch (const json::exception& e) {
        throw ParseError("snapshot " + origin + ": bad schema: " + e.what());
    }
}

void SearchSnapshot::save(const std::filesystem::path& path) const {
    util::atomic_write_file(path, to_json_string());
}

SearchSnapshot SearchSnapshot::load(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw ValidationError("snapshot file not found: " + path.string());
    return from_json_string(util::read_file(path), path.string());
}

std::vector<SearchResult> SnapshotProvider::search(const std::string& query, int n) {
    auto it = snapshot_.entries.find(canonical_query(query));
    if (it == snapshot_.entries.end()) throw SnapshotMissError(canonical_query(query));
    std::vector<SearchResult> out = it->second;
    if (static_cast<int>(out.size()) > n) out.resize(static_cast<size_t>(n));
    return out;
}

SearchSnapshot record_snapshot(SearchProvider& provider, const std::vector<std::string>& queries,
                               int n, const std::filesystem::path& out) {
    SearchSnapshot snap;
    if (std::filesystem::exists(out)) snap = SearchSnapshot::load(out);
    snap.provider_id = provider.provider_id();
    snap.created_at = util::rfc3339_now();
    for (const auto& q : queries) {
        std::string key = canonical_query(q);
        snap.entries[key] = provider.search(key, n);  // throws on provider failure, nothing written
    }
    snap.save(out);
    return snap;
}

void verify_snapshot(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw ValidationError("snapshot file not found: " + path.string());
    std::string text = util::read_file(path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("snapshot " + path.string() + ": " + e.what());
    }
    if (j.value("schema_version", 0) != kSchemaVersion)
        throw ValidationError("snapshot " + path.string() + ": unsupported schema_version");
    SearchSnapshot snap = SearchSnapshot::from_json_string(text, path.string());
    for (const auto& [query, results] : snap.entries) {
        int expected_rank = 1;
        for (const auto& r : results) {
            if (!net::is_http_url(r.url))
                throw ValidationError("snapshot " + path.string() + ": entry \"" + query +
                                      "\" has non-http url: " + r.url);
            if (r.rank != expected_rank)
                throw ValidationError("snapshot " + path.string() + ": entry \"" + query +
                                      "\" has non-consecutive ranks");
            ++expected_rank;
        }
    }
}

}  // namespace ami::search
