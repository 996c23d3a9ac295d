// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

namespace ami::search {

struct SearchResult {
    std::string url;      // absolute http(s)
    std::string title;
    std::string snippet;
    int rank = 0;         // 1-based within one response
};

bool operator==(const SearchResult& a, const SearchResult& b);

/// Abstract ranked-URL source; implementations: live Google-compatible client,
/// snapshot replay.
class SearchProvider {
public:
    virtual ~SearchProvider() = default;
    virtual std::vector<SearchResult> search(const std::string& query, int n) = 0;
    virtual std::string provider_id() const = 0;
};

}  // namespace ami::search
