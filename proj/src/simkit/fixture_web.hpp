// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "search/snapshot.hpp"
#include "simkit/server.hpp"

namespace ami::sim {

struct CorpusPage {
    std::string path;   // relative, e.g. "pages/jane-roe-p1.html"
    std::string title;
    int status = 200;   // manifest can force 404/500 fault pages
    std::string html;
};

/// HTML corpus plus the manifest mapping identity names to page sets.
/// Layout: <dir>/manifest.yaml + the page files it names. A manifest entry
/// without its page file is a startup error.
class FixtureCorpus {
public:
    static FixtureCorpus load(const std::filesystem::path& dir);

    const std::map<std::string, std::vector<CorpusPage>>& by_identity() const {
        return by_identity_;
    }
    const CorpusPage* find_page(const std::string& rel_path) const;

private:
    std::map<std::string, std::vector<CorpusPage>> by_identity_;
    std::map<std::string, const CorpusPage*> by_path_;
};

/// Serves corpus pages at stable local URLs and derives the SearchSnapshot
/// that points at them, enabling fully offline screening.
class FixtureWeb {
public:
    explicit FixtureWeb(FixtureCorpus corpus);

    std::string base_url() const;
    std::string origin() const { return base_url(); }

    /// Snapshot whose queries are build_query(name-only identity); results
    /// point at this server (or at `base_url_override` when given, for
    /// replay-only snapshots that never open a socket).
    search::SearchSnapshot snapshot(int n, const std::string& base_url_override = "") const;

    /// Writes <dir>/search.json plus <dir>/pages/<sha256(url)>.json bodies so
    /// a crawl can replay from disk. Deterministic: fixed timestamps, so
    /// regeneration from the same corpus is byte-identical.
    void export_snapshot_dir(const std::filesystem::path& dir, int n,
                             const std::string& base_url_override = "") const;

private:
    SimResponse handle(const SimRequest& req);

    FixtureCorpus corpus_;
    std::unique_ptr<LocalServer> server_;
};

}  // namespace ami::sim
