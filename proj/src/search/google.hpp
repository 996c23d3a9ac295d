// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/config.hpp"
#include "search/types.hpp"

namespace ami::search {

/// Google Custom Search-compatible client: GET
/// {base}/customsearch/v1?key=..&cx=..&q=..&num=..
/// 429 surfaces as RateLimitError (retryable by the caller); other failures as
/// TransportError. Safe for concurrent use.
class GoogleSearchClient : public SearchProvider {
public:
    explicit GoogleSearchClient(const EndpointConfig& endpoint, std::string http_proxy = "");

    std::vector<SearchResult> search(const std::string& query, int n) override;
    std::string provider_id() const override { return "google-custom-search"; }

private:
    EndpointConfig endpoint_;
    std::string http_proxy_;
};

}  // namespace ami::search
