// SPDX-License-Identifier: Apache-2.0
#include "search/filter.hpp"

#include <algorithm>

#include "net/url.hpp"
#include "util/strings.hpp"

namespace ami::search {

bool host_matches(const std::string& host, const std::string& pattern) {
    std::string h = util::to_lower(host);
    std::string p = util::to_lower(util::trim(pattern));
    if (p.empty()) return false;
    if (util::starts_with(p, "*.")) {
        // subdomains only
        return util::ends_with(h, p.substr(1));  // ".linkedin.com"
    }
    return h == p || util::ends_with(h, "." + p);
}

std::vector<SearchResult> filter_results(const std::vector<SearchResult>& results,
                                         const std::vector<std::string>& blocklist,
                                         const std::vector<std::string>& blocked_extensions) {
    std::vector<SearchResult> out;
    out.reserve(results.size());
    for (const auto& r : results) {
        net::Url url;
        try {
            url = net::parse_url(r.url);
        } catch (const std::invalid_argument&) {
            continue;
        }
        bool blocked = std::any_of(blocklist.begin(), blocklist.end(), [&](const std::string& p) {
            return host_matches(url.host, p);
        });
        if (blocked) continue;
        std::string ext = net::path_extension(url);
        if (!ext.empty() &&
            std::find(blocked_extensions.begin(), blocked_extensions.end(), ext) !=
                blocked_extensions.end())
            continue;
        out.push_back(r);
    }
    return out;
}

}  // namespace ami::search
