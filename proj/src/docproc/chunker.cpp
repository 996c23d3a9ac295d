// SPDX-License-Identifier: Apache-2.0
#include "docproc/chunker.hpp"

#include <array>
#include <stdexcept>

namespace ami::doc {

namespace {
const std::array<std::string, 4> kSeparators = {"\n\n", "\n", ". ", " "};
}

std::vector<Chunk> chunk_text(const std::string& text, int chunk_chars, int overlap_chars) {
    if (text.empty()) throw std::invalid_argument("chunk_text: empty text");
    if (chunk_chars < 1 || overlap_chars < 0 || overlap_chars >= chunk_chars)
        throw std::invalid_argument("chunk_text: need 0 <= overlap_chars < chunk_chars");

    const size_t len = text.size();
    const size_t window = static_cast<size_t>(chunk_chars);
    const size_t overlap = static_cast<size_t>(overlap_chars);

    std::vector<Chunk> chunks;
    size_t pos = 0;
    while (true) {
        if (len - pos <= window) {
            Chunk c;
            c.index = static_cast<int>(chunks.size());
            c.span_start = pos;
            c.span_end = len;
            c.text = text.substr(pos);
            chunks.push_back(std::move(c));
            break;
        }

        size_t span_end = pos + window;  // hard cut unless a separator fits
        size_t text_end = span_end;
        for (const std::string& sep : kSeparators) {
            if (sep.size() > window) continue;
            // candidate start i must satisfy:
            //   i >= pos + 1                      (non-empty chunk text)
            //   i + sep.size() <= pos + window    (separator inside the window)
            //   i + sep.size() >  pos + overlap   (the next start advances)
            size_t hi = pos + window - sep.size();
            size_t lo = pos + 1;
            size_t min_end = pos + overlap + 1;  // i + sep.size() >= min_end
            if (min_end > sep.size() && min_end - sep.size() > lo) lo = min_end - sep.size();
            if (lo > hi) continue;
            size_t i = text.rfind(sep, hi);
            if (i == std::string::npos || i < lo) continue;
            span_end = i + sep.size();
            text_end = i;
            break;
        }

        Chunk c;
        c.index = static_cast<int>(chunks.size());
        c.span_start = pos;
        c.span_end = span_end;
        c.text = text.substr(pos, text_end - pos);
        chunks.push_back(std::move(c));
        pos = span_end - overlap;
    }
    return chunks;
}

std::vector<Chunk> chunk_document(const std::string& text, const std::string& doc_hash,
                                  int chunk_chars, int overlap_chars) {
    std::vector<Chunk> chunks = chunk_text(text, chunk_chars, overlap_chars);
    for (auto& c : chunks) c.doc_hash = doc_hash;
    return chunks;
}

}  // namespace ami::doc
