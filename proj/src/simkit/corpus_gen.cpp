// SPDX-License-Identifier: Apache-2.0
#include "simkit/corpus_gen.hpp"

#include <yaml-cpp/yaml.h>

#include <cctype>

#include "simkit/fixture_web.hpp"
#include "util/csv.hpp"
#include "util/fsutil.hpp"

namespace ami::sim {

namespace {

std::string slugify(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        else if (!out.empty() && out.back() != '-')
            out.push_back('-');
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out;
}

std::string sentence_for(const std::string& keyword, const std::string& name) {
    if (keyword.empty())
        return "The report covers a charity gala and a research award.";
    if (keyword == "investigation")
        return "Officials opened an investigation into activities linked to " + name + ".";
    if (keyword == "fined")
        return "A financial regulator fined " + name + " after a compliance review.";
    if (keyword == "fraud")
        return "Prosecutors described the scheme as fraud and named " + name + " in the filing.";
    if (keyword == "money laundering")
        return "The indictment alleges money laundering through shell companies tied to " + name +
               ".";
    if (keyword == "sanctions")
        return "The treasury placed " + name + " under sanctions following the designation.";
    return "The report mentions " + keyword + " in connection with " + name + ".";
}

std::string page_html(const std::string& name, const std::string& title,
                      const std::string& keyword) {
    return "<html><head><title>" + title +
           "</title></head>\n<body>\n"
           "<nav><a href=\"/\">Home</a> <a href=\"/news\">News</a></nav>\n"
           "<h1>" + title + "</h1>\n"
           "<p>" + name + " appeared in coverage this week. " + sentence_for(keyword, name) +
           "</p>\n"
           "<p>Community notes mention that " + name + " attended a local forum.</p>\n"
           "<footer>Contact the newsroom.</footer>\n"
           "</body></html>\n";
}

const std::vector<std::string>& population_keys() {
    static const std::vector<std::string> keys = {"clean", "pep", "rw", "sdn"};
    return keys;
}

std::string identity_name(const std::string& population, int idx) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d", idx);
    if (population == "clean") return "Avery Meadow" + std::string(buf);
    if (population == "pep") return "Jordan Hollis" + std::string(buf);
    if (population == "rw") return "Quinn Barlow" + std::string(buf);
    return "Marlo Vesper" + std::string(buf);
}

struct ManifestEntry {
    std::string name;
    std::vector<CorpusPage> pages;  // html filled separately
};

void write_manifest(const std::filesystem::path& corpus_dir,
                    const std::vector<ManifestEntry>& entries) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    for (const auto& entry : entries) {
        out << YAML::Key << entry.name << YAML::Value << YAML::BeginSeq;
        for (const auto& page : entry.pages) {
            out << YAML::BeginMap;
            out << YAML::Key << "path" << YAML::Value << page.path;
            out << YAML::Key << "title" << YAML::Value << page.title;
            out << YAML::Key << "status" << YAML::Value << page.status;
            out << YAML::EndMap;
        }
        out << YAML::EndSeq;
    }
    out << YAML::EndMap;
    util::atomic_write_file(corpus_dir / "manifest.yaml", std::string(out.c_str()) + "\n");
}

}  // namespace

RuleBasedScorer population_scorer() {
    RuleBasedScorer scorer;
    scorer.keyword_weights = {
        {"investigation", 0.30},    {"fined", 0.55},     {"fraud", 0.70},
        {"money laundering", 0.85}, {"sanctions", 0.90},
    };
    scorer.default_score = 0.02;
    scorer.verdict_mode = VerdictMode::MeanOfMeans;
    return scorer;
}

std::string planted_keyword(const std::string& population, int identity_idx, int page_idx) {
    int p = page_idx % 4;
    bool odd = identity_idx % 2 == 1;
    if (population == "clean") return "";
    if (population == "pep") {
        if (p == 0) return "investigation";
        if (p == 1 && odd) return "investigation";
        return "";
    }
    if (population == "rw") {
        if (!odd) {
            if (p == 0) return "fined";
            if (p == 1) return "investigation";
            return "";
        }
        if (p == 0 || p == 1) return "fined";
        if (p == 2) return "investigation";
        return "";
    }
    if (population == "sdn") {
        if (odd) return "sanctions";
        static const char* even_pattern[4] = {"sanctions", "money laundering", "fraud",
                                              "sanctions"};
        return even_pattern[p];
    }
    return "";
}

GeneratedCorpus generate_population_corpus(const std::filesystem::path& root,
                                           const PopulationCorpusSpec& spec) {
    GeneratedCorpus out;
    out.corpus_dir = root / "corpus";
    out.dataset_dir = root / "dataset";
    std::filesystem::create_directories(out.corpus_dir / "pages");
    std::filesystem::create_directories(out.dataset_dir);

    std::vector<ManifestEntry> manifest;
    for (const std::string& population : population_keys()) {
        std::string csv = "name,dob,attributes,source\n";
        for (int i = 0; i < spec.identities_per_population; ++i) {
            std::string name = identity_name(population, i);
            out.names_by_population[population].push_back(name);
            csv += util::csv_row({name, "", "", "synthetic"});

            ManifestEntry entry;
            entry.name = name;
            for (int j = 0; j < spec.pages_per_identity; ++j) {
                CorpusPage page;
                page.path = "pages/" + slugify(name) + "-p" + std::to_string(j) + ".html";
                page.title = name + " coverage " + std::to_string(j);
                page.status = 200;
                std::string keyword = planted_keyword(population, i, j);
                util::atomic_write_file(out.corpus_dir / page.path,
                                        page_html(name, page.title, keyword));
                entry.pages.push_back(std::move(page));
            }
            manifest.push_back(std::move(entry));
        }
        util::atomic_write_file(out.dataset_dir / (population + ".csv"), csv);
    }
    write_manifest(out.corpus_dir, manifest);
    return out;
}

GeneratedCorpus generate_single_identity_corpus(const std::filesystem::path& root,
                                                const std::string& name, int pages,
                                                const std::map<int, int>& page_status) {
    GeneratedCorpus out;
    out.corpus_dir = root / "corpus";
    out.dataset_dir = root / "dataset";
    std::filesystem::create_directories(out.corpus_dir / "pages");

    static const char* cycle[4] = {"", "investigation", "fraud", "sanctions"};
    ManifestEntry entry;
    entry.name = name;
    out.names_by_population["single"].push_back(name);
    for (int j = 0; j < pages; ++j) {
        CorpusPage page;
        page.path = "pages/" + slugify(name) + "-p" + std::to_string(j) + ".html";
        page.title = name + " coverage " + std::to_string(j);
        auto it = page_status.find(j);
        page.status = it == page_status.end() ? 200 : it->second;
        util::atomic_write_file(out.corpus_dir / page.path,
                                page_html(name, page.title, cycle[j % 4]));
        entry.pages.push_back(std::move(page));
    }
    write_manifest(out.corpus_dir, {entry});
    return out;
}

}  // namespace ami::sim
