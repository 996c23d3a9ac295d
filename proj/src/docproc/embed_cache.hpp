// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace ami::doc {

/// On-disk vector cache: <root>/emb/<2-char shard>/<sha256(model_id || text)>.vec
/// Each file is a one-line JSON header {"dim":N,"model":...} followed by N
/// little-endian float32 values. Writes are atomic; hits are bit-identical to
/// what was stored.
class EmbedCache {
public:
    explicit EmbedCache(std::filesystem::path root) : root_(std::move(root)) {}

    std::optional<std::vector<float>> lookup(const std::string& model_id,
                                             const std::string& text) const;
    void store(const std::string& model_id, const std::string& text,
               const std::vector<float>& vec) const;

    std::filesystem::path entry_path(const std::string& model_id, const std::string& text) const;

private:
    std::filesystem::path root_;
};

}  // namespace ami::doc
