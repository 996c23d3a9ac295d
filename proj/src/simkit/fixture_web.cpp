// SPDX-License-Identifier: Apache-2.0
#include "simkit/fixture_web.hpp"

#include <yaml-cpp/yaml.h>

#include "core/errors.hpp"
#include "core/identity.hpp"
#include "crawler/page_store.hpp"
#include "search/query.hpp"
#include "util/fsutil.hpp"
#include "util/strings.hpp"
#include "util/timeutil.hpp"

namespace ami::sim {

FixtureCorpus FixtureCorpus::load(const std::filesystem::path& dir) {
    std::filesystem::path manifest_path = dir / "manifest.yaml";
    if (!std::filesystem::exists(manifest_path))
        throw ValidationError("fixture corpus: missing manifest " + manifest_path.string());

    YAML::Node root;
    try {
        root = YAML::Load(util::read_file(manifest_path));
    } catch (const YAML::Exception& e) {
        throw ParseError("fixture corpus manifest: " + std::string(e.what()));
    }

    FixtureCorpus corpus;
    for (const auto& entry : root) {
        std::string name = entry.first.as<std::string>();
        std::vector<CorpusPage> pages;
        for (const auto& page_node : entry.second) {
            CorpusPage page;
            page.path = page_node["path"].as<std::string>();
            page.title = page_node["title"] ? page_node["title"].as<std::string>() : "";
            page.status = page_node["status"] ? page_node["status"].as<int>() : 200;
            std::filesystem::path file = dir / page.path;
            if (!std::filesystem::exists(file))
                throw ValidationError("fixture corpus: manifest names missing page file " +
                                      file.string());
            page.html = util::read_file(file);
            pages.push_back(std::move(page));
        }
        corpus.by_identity_[name] = std::move(pages);
    }
    for (const auto& [name, pages] : corpus.by_identity_) {
        for (const auto& page : pages) corpus.by_path_["/" + page.path] = &page;
    }
    return corpus;
}

const CorpusPage* FixtureCorpus::find_page(const std::string& rel_path) const {
    auto it = by_path_.find(rel_path);
    return it == by_path_.end() ? nullptr : it->second;
}

FixtureWeb::FixtureWeb(FixtureCorpus corpus) : corpus_(std::move(corpus)) {
    server_ = std::make_unique<LocalServer>([this](const SimRequest& r) { return handle(r); });
}

std::string FixtureWeb::base_url() const { return server_->base_url(); }

SimResponse FixtureWeb::handle(const SimRequest& req) {
    const CorpusPage* page = corpus_.find_page(req.path);
    if (!page) return SimResponse{404, "text/html", "<html><body>not found</body></html>"};
    if (page->status != 200)
        return SimResponse{page->status, "text/html", "<html><body>error page</body></html>"};
    return SimResponse{200, "text/html", page->html};
}

search::SearchSnapshot FixtureWeb::snapshot(int n, const std::string& base_url_override) const {
    std::string base = base_url_override.empty() ? base_url() : base_url_override;
    search::SearchSnapshot snap;
    snap.provider_id = "fixture-web";
    snap.created_at = util::kEpochStamp;
    for (const auto& [name, pages] : corpus_.by_identity()) {
        std::string query = search::canonical_query(search::build_query(Identity::make(name)));
        std::vector<search::SearchResult> results;
        int rank = 1;
        for (const auto& page : pages) {
            if (rank > n) break;
            search::SearchResult r;
            r.url = base + "/" + page.path;
            r.title = page.title;
            r.snippet = util::elide(util::collapse_whitespace(page.title) + " - fixture article",
                                    160, "...");
            r.rank = rank++;
            results.push_back(std::move(r));
        }
        snap.entries[query] = std::move(results);
    }
    return snap;
}

void FixtureWeb::export_snapshot_dir(const std::filesystem::path& dir, int n,
                                     const std::string& base_url_override) const {
    std::string base = base_url_override.empty() ? base_url() : base_url_override;
    search::SearchSnapshot snap = snapshot(n, base);
    std::filesystem::create_directories(dir);
    snap.save(dir / "search.json");

    crawl::PageStore store(dir);
    for (const auto& [name, pages] : corpus_.by_identity()) {
        for (const auto& page : pages) {
            crawl::RawPage raw;
            raw.url = base + "/" + page.path;
            raw.status = page.status;
            raw.content_type = "text/html";
            raw.body = page.status == 200 ? page.html : "<html><body>error page</body></html>";
            raw.fetched_at = util::kEpochStamp;
            store.store(raw);
        }
    }
}

}  // namespace ami::sim
