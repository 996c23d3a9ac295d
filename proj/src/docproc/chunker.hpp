// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ami::doc {

/// One overlapping segment of a source document. char_span covers the source
/// including any separator consumed at the split; text excludes that trailing
/// separator. Spans of one document cover [0, len) and consecutive spans
/// overlap by exactly overlap_chars (final chunk exempt from the length rule).
struct Chunk {
    std::string doc_hash;  // sha256 of the source text
    int index = 0;         // 0-based position within the document
    std::string text;
    size_t span_start = 0;
    size_t span_end = 0;
};

/// Splits on the separator hierarchy "\n\n" > "\n" > ". " > " " > hard cut:
/// within each window the highest-priority separator wins, and among its
/// occurrences the latest valid one. A consumed separator stays inside the
/// preceding chunk's span but is trimmed from its text; the next span starts
/// overlap_chars before the previous span's end.
/// pre: text non-empty, 0 <= overlap_chars < chunk_chars.
std::vector<Chunk> chunk_text(const std::string& text, int chunk_chars, int overlap_chars);

/// chunk_text + doc_hash stamping for a fetched document.
std::vector<Chunk> chunk_document(const std::string& text, const std::string& doc_hash,
                                  int chunk_chars, int overlap_chars);

}  // namespace ami::doc
