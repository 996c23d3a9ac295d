// SPDX-License-Identifier: Apache-2.0
#include "docproc/embed_cache.hpp"

#include <nlohmann/json.hpp>

#include <cstring>

#include "core/errors.hpp"
#include "util/fsutil.hpp"
#include "util/hash.hpp"

namespace ami::doc {

std::filesystem::path EmbedCache::entry_path(const std::string& model_id,
                                             const std::string& text) const {
    std::string key = util::sha256_hex(model_id + text);
    return root_ / "emb" / key.substr(0, 2) / (key + ".vec");
}

std::optional<std::vector<float>> EmbedCache::lookup(const std::string& model_id,
                                                     const std::string& text) const {
    std::filesystem::path path = entry_path(model_id, text);
    if (!std::filesystem::exists(path)) return std::nullopt;
    std::string raw = util::read_file(path);
    size_t newline = raw.find('\n');
    if (newline == std::string::npos) throw ParseError("embed cache: bad entry " + path.string());
    nlohmann::json header;
    try {
        header = nlohmann::json::parse(raw.substr(0, newline));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("embed cache: bad header in " + path.string() + ": " + e.what());
    }
    size_t dim = header.at("dim").get<size_t>();
    if (raw.size() - newline - 1 != dim * sizeof(float))
        throw ParseError("embed cache: truncated entry " + path.string());
    std::vector<float> vec(dim);
    std::memcpy(vec.data(), raw.data() + newline + 1, dim * sizeof(float));
    return vec;
}

void EmbedCache::store(const std::string& model_id, const std::string& text,
                       const std::vector<float>& vec) const {
    nlohmann::json header{{"dim", vec.size()}, {"model", model_id}};
    std::string out = header.dump();
    out.push_back('\n');
    size_t offset = out.size();
    out.resize(offset + vec.size() * sizeof(float));
    std::memcpy(out.data() + offset, vec.data(), vec.size() * sizeof(float));
    util::atomic_write_file(entry_path(model_id, text), out);
}

}  // namespace ami::doc
