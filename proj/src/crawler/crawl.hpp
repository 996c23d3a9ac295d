// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "core/config.hpp"
#include "crawler/document.hpp"
#include "crawler/page_store.hpp"
#include "search/types.hpp"

namespace ami::crawl {

/// One WebDocument per input result, in input order; failures stay per-item.
/// Duplicate URLs fetch once and share the content hash. When
/// config.snapshot_path is set, bodies replay from the page store and no
/// socket is opened; otherwise live fetches run concurrently (bounded by
/// max_concurrency) with robots.txt honored, and `record_to` (optional)
/// persists fetched bodies.
std::vector<WebDocument> crawl_results(const std::vector<search::SearchResult>& results,
                                       const RunConfig& config,
                                       const PageStore* record_to = nullptr);

/// Raw page -> WebDocument (extraction + hashing); exposed for replay reuse.
WebDocument document_from_page(const RawPage& page);

}  // namespace ami::crawl
