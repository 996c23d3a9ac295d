// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace ami::crawl {

struct ExtractedPage {
    std::string title;  // <title>, else first <h1>, else empty
    std::string text;   // visible text, block elements newline-separated
};

/// Tolerant tag-level HTML extraction: script/style/nav/header/footer/aside/
/// form subtrees are dropped, entities decoded, whitespace normalized (space
/// runs collapsed, 3+ newlines collapsed to 2). Never throws on bad markup;
/// invalid UTF-8 bytes are replaced.
ExtractedPage extract_text(std::string_view html, const std::string& url);

}  // namespace ami::crawl
