// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "search/types.hpp"

namespace ami::search {

/// Case-insensitive host suffix match. "facebook.com" matches the apex and any
/// subdomain; "*.linkedin.com" matches subdomains only.
bool host_matches(const std::string& host, const std::string& pattern);

/// Drops results whose host matches a blocklist pattern or whose path ends in
/// a blocked extension. Keeps order; never renumbers ranks. Unparseable URLs
/// are dropped too. Idempotent.
std::vector<SearchResult> filter_results(const std::vector<SearchResult>& results,
                                         const std::vector<std::string>& blocklist,
                                         const std::vector<std::string>& blocked_extensions);

}  // namespace ami::search
