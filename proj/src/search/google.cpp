// SPDX-License-Identifier: Apache-2.0
#include "search/google.hpp"

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "net/http.hpp"
#include "net/url.hpp"

namespace ami::search {

GoogleSearchClient::GoogleSearchClient(const EndpointConfig& endpoint, std::string http_proxy)
    : endpoint_(endpoint), http_proxy_(std::move(http_proxy)) {
    if (endpoint_.api_key.empty())
        throw ConfigError("live search needs an API key; set AMI_SEARCH_API_KEY");
    if (endpoint_.engine_id.empty())
        throw ConfigError("live search needs an engine id; set AMI_SEARCH_ENGINE_ID");
}

std::vector<SearchResult> GoogleSearchClient::search(const std::string& query, int n) {
    std::string url_text = endpoint_.base_url + "/customsearch/v1?key=" +
                           net::url_encode(endpoint_.api_key) + "&cx=" +
                           net::url_encode(endpoint_.engine_id) + "&q=" + net::url_encode(query) +
                           "&num=" + std::to_string(n);
    net::HttpRequestOptions opts;
    opts.proxy = http_proxy_;
    net::HttpResponse res;
    try {
        res = net::http_get(net::parse_url(url_text), opts);
    } catch (const net::HttpError& e) {
        throw TransportError(std::string("search provider: ") + e.what());
    }
    if (res.status == 429)
        throw RateLimitError("search provider: quota exceeded (HTTP 429)");
    if (res.status < 200 || res.status >= 300)
        throw TransportError("search provider: HTTP " + std::to_string(res.status));

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(res.body);
    } catch (const nlohmann::json::parse_error& e) {
        throw TransportError(std::string("search provider: bad response body: ") + e.what());
    }
    std::vector<SearchResult> out;
    if (j.contains("items")) {
        for (const auto& item : j.at("items")) {
            SearchResult r;
            r.url = item.value("link", "");
            r.title = item.value("title", "");
            r.snippet = item.value("snippet", "");
            if (!net::is_http_url(r.url)) continue;
            r.rank = static_cast<int>(out.size()) + 1;
            out.push_back(std::move(r));
            if (static_cast<int>(out.size()) >= n) break;
        }
    }
    return out;
}

}  // namespace ami::search
