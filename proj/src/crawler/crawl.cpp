// SPDX-License-Identifier: Apache-2.0
#include "crawler/crawl.hpp"

#include <map>
#include <mutex>

#include "crawler/extract.hpp"
#include "crawler/fetch.hpp"
#include "crawler/robots.hpp"
#include "net/guard.hpp"
#include "net/http.hpp"
#include "net/url.hpp"
#include "util/hash.hpp"
#include "util/parallel.hpp"
#include "util/timeutil.hpp"

namespace ami::crawl {

namespace {

constexpr const char* kUserAgentToken = "amiscreen";

/// Per-crawl robots.txt cache; one fetch per host.
class RobotsCache {
public:
    explicit RobotsCache(const RunConfig& config) : config_(config) {}

    bool allowed(const net::Url& url) {
        RobotsRules rules;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = cache_.find(url.origin());
            if (it != cache_.end()) {
                rules = it->second;
                return robots_allowed(rules, url.path);
            }
        }
        RobotsRules fetched = fetch_rules(url);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            cache_.emplace(url.origin(), fetched);
        }
        return robots_allowed(fetched, url.path);
    }

private:
    RobotsRules fetch_rules(const net::Url& url) {
        net::Url robots_url = url;
        robots_url.path = "/robots.txt";
        net::HttpRequestOptions opts;
        opts.timeout = std::chrono::milliseconds(config_.fetch_timeout_ms);
        opts.proxy = config_.http_proxy;
        try {
            net::HttpResponse res = net::http_get(robots_url, opts);
            if (res.status == 200) return parse_robots(res.body, kUserAgentToken);
        } catch (const net::GuardViolation&) {
            throw;
        } catch (const net::HttpError&) {
            // unreachable robots.txt: crawl proceeds
        }
        return {};
    }

    const RunConfig& config_;
    std::mutex mutex_;
    std::map<std::string, RobotsRules> cache_;
};

}  // namespace

WebDocument WebDocument::failed(std::string url, std::string reason, std::string retrieved_at) {
    WebDocument doc;
    doc.url = std::move(url);
    doc.retrieved_at = std::move(retrieved_at);
    doc.fetched = false;
    doc.failure_reason = std::move(reason);
    return doc;
}

WebDocument document_from_page(const RawPage& page) {
    ExtractedPage extracted = extract_text(page.body, page.url);
    if (extracted.text.empty())
        return WebDocument::failed(page.url, "empty_content", page.fetched_at);
    WebDocument doc;
    doc.url = page.url;
    doc.title = extracted.title;
    doc.retrieved_at = page.fetched_at;
    doc.text = std::move(extracted.text);
    doc.content_hash = util::sha256_hex(doc.text);
    doc.fetched = true;
    return doc;
}

std::vector<WebDocument> crawl_results(const std::vector<search::SearchResult>& results,
                                       const RunConfig& config, const PageStore* record_to) {
    const bool replay = !config.snapshot_path.empty();
    PageStore replay_store(config.snapshot_path);

    // fetch each unique URL once
    std::vector<std::string> unique_urls;
    std::map<std::string, size_t> url_slot;
    for (const auto& r : results) {
        if (url_slot.emplace(r.url, unique_urls.size()).second) unique_urls.push_back(r.url);
    }

    std::vector<WebDocument> fetched(unique_urls.size());
    RobotsCache robots(config);

    util::parallel_for(unique_urls.size(), config.max_concurrency, [&](size_t i) {
        const std::string& url = unique_urls[i];
        if (replay) {
            std::optional<RawPage> page = replay_store.lookup(url);
            if (!page) {
                fetched[i] = WebDocument::failed(url, "snapshot_miss", util::kEpochStamp);
            } else if (page->status < 200 || page->status >= 300) {
                fetched[i] =
                    WebDocument::failed(url, "http_" + std::to_string(page->status), page->fetched_at);
            } else {
                fetched[i] = document_from_page(*page);
            }
            return;
        }
        if (config.honor_robots) {
            net::Url parsed;
            bool parse_ok = true;
            try {
                parsed = net::parse_url(url);
            } catch (const std::invalid_argument&) {
                parse_ok = false;
            }
            if (parse_ok && !robots.allowed(parsed)) {
                fetched[i] = WebDocument::failed(url, "robots_disallowed", util::rfc3339_now());
                return;
            }
        }
        FetchOutcome outcome = fetch_url(url, config);
        if (!outcome.ok) {
            fetched[i] = WebDocument::failed(url, outcome.failure_reason, util::rfc3339_now());
            return;
        }
        if (record_to) record_to->store(outcome.page);
        fetched[i] = document_from_page(outcome.page);
    });

    std::vector<WebDocument> out;
    out.reserve(results.size());
    for (const auto& r : results) out.push_back(fetched[url_slot.at(r.url)]);
    return out;
}

}  // namespace ami::crawl
