// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace ami::crawl {

/// Extracted page content with provenance. status=fetched implies non-empty
/// text and content_hash = sha256(text); status=failed implies empty text and
/// a non-empty reason.
struct WebDocument {
    std::string url;
    std::string title;
    std::string retrieved_at;  // RFC3339
    std::string text;
    std::string content_hash;  // hex sha256 of text
    bool fetched = false;
    std::string failure_reason;  // e.g. "http_404", "timeout", "empty_content"

    static WebDocument failed(std::string url, std::string reason, std::string retrieved_at);
};

}  // namespace ami::crawl
