// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/config.hpp"
#include "crawler/page_store.hpp"

namespace ami::crawl {

struct FetchOutcome {
    bool ok = false;
    RawPage page;
    std::string failure_reason;  // "timeout", "http_404", "oversize_body", ...
};

/// Live fetch through the HTTP chokepoint; failures come back as per-URL
/// reasons, never exceptions (guard violations excepted).
FetchOutcome fetch_url(const std::string& url, const RunConfig& config);

}  // namespace ami::crawl
