// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace ami::crawl {

struct RawPage {
    std::string url;
    int status = 0;
    std::string content_type;
    std::string body;
    std::string fetched_at;  // RFC3339
};

/// Raw page bodies keyed by sha256(url) under <root>/pages/, one JSON file per
/// page: {url, status, content_type, body_base64, fetched_at}. Concurrent
/// readers are fine; writes are atomic per file.
class PageStore {
public:
    explicit PageStore(std::filesystem::path root) : root_(std::move(root)) {}

    void store(const RawPage& page) const;
    std::optional<RawPage> lookup(const std::string& url) const;

    std::filesystem::path page_path(const std::string& url) const;
    const std::filesystem::path& root() const { return root_; }

private:
    std::filesystem::path root_;
};

}  // namespace ami::crawl
