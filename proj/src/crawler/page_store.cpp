// SPDX-License-Identifier: Apache-2.0
#include "crawler/page_store.hpp"

#include <nlohmann/json.hpp>

#include "core/errors.hpp"
#include "util/base64.hpp"
#include "util/fsutil.hpp"
#include "util/hash.hpp"

namespace ami::crawl {

std::filesystem::path PageStore::page_path(const std::string& url) const {
    return root_ / "pages" / (util::sha256_hex(url) + ".json");
}

void PageStore::store(const RawPage& page) const {
    nlohmann::json j{{"body_base64", util::base64_encode(page.body)},
                     {"content_type", page.content_type},
                     {"fetched_at", page.fetched_at},
                     {"status", page.status},
                     {"url", page.url}};
    util::atomic_write_file(page_path(page.url), j.dump(2) + "\n");
}

std::optional<RawPage> PageStore::lookup(const std::string& url) const {
    std::filesystem::path path = page_path(url);
    if (!std::filesystem::exists(path)) return std::nullopt;
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(util::read_file(path));
        RawPage page;
        page.url = j.at("url").get<std::string>();
        page.status = j.at("status").get<int>();
        page.content_type = j.at("content_type").get<std::string>();
        page.body = util::base64_decode(j.at("body_base64").get<std::string>());
        page.fetched_at = j.at("fetched_at").get<std::string>();
        return page;
    } catch (const std::exception& e) {
        throw ParseError("page snapshot " + path.string() + ": " + e.what());
    }
}

}  // namespace ami::crawl
