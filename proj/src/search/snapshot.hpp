// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "search/types.hpp"

namespace ami::search {

/// Recorded search results keyed by canonical query. Replay is byte-identical
/// to what was recorded.
struct SearchSnapshot {
    std::string provider_id;
    std::string created_at;  // RFC3339
    std::map<std::string, std::vector<SearchResult>> entries;

    std::string to_json_string() const;
    static SearchSnapshot from_json_string(const std::string& text, const std::string& origin);

    void save(const std::filesystem::path& path) const;
    static SearchSnapshot load(const std::filesystem::path& path);
};

/// Read-only replay provider. A query absent from the snapshot raises
/// SnapshotMissError; there is no live fallback.
class SnapshotProvider : public SearchProvider {
public:
    explicit SnapshotProvider(SearchSnapshot snapshot) : snapshot_(std::move(snapshot)) {}

    std::vector<SearchResult> search(const std::string& query, int n) override;
    std::string provider_id() const override { return snapshot_.provider_id + " (replay)"; }

private:
    SearchSnapshot snapshot_;
};

/// Runs each query against the live provider and writes the snapshot file.
/// Existing entries at `out` are merged; re-recorded queries are overwritten.
/// A provider failure aborts without leaving a partial file.
SearchSnapshot record_snapshot(SearchProvider& provider, const std::vector<std::string>& queries,
                               int n, const std::filesystem::path& out);

/// Schema/integrity check; throws ParseError or ValidationError with detail.
void verify_snapshot(const std::filesystem::path& path);

}  // namespace ami::search
