// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "simkit/mock_llm.hpp"

namespace ami::sim {

/// Synthetic four-population corpus. Adversity keywords appear with
/// population-dependent density so the rule-based scorer induces the expected
/// risk ordering by construction; the per-identity page patterns are fixed and
/// documented so expected means can be hand-computed before any run.
struct PopulationCorpusSpec {
    int identities_per_population = 10;
    int pages_per_identity = 4;
};

struct GeneratedCorpus {
    std::filesystem::path corpus_dir;   // manifest.yaml + pages/
    std::filesystem::path dataset_dir;  // clean.csv, pep.csv, rw.csv, sdn.csv
    std::map<std::string, std::vector<std::string>> names_by_population;  // keys: clean,pep,rw,sdn
};

/// Scorer the synthetic corpus is designed against.
RuleBasedScorer population_scorer();

/// Writes the corpus + dataset CSVs under `root` (corpus/, dataset/).
GeneratedCorpus generate_population_corpus(const std::filesystem::path& root,
                                           const PopulationCorpusSpec& spec = {});

/// Keyword planted on page `page_idx` for identity `identity_idx` of a
/// population ("" = clean page). Single source of truth for page content and
/// for the acceptance suite's hand computation.
std::string planted_keyword(const std::string& population, int identity_idx, int page_idx);

/// A small single-identity corpus (10 articles) used by protocol-shape and
/// robustness tests; `page_status` overrides per-page HTTP statuses.
GeneratedCorpus generate_single_identity_corpus(const std::filesystem::path& root,
                                                const std::string& name, int pages,
                                                const std::map<int, int>& page_status = {});

}  // namespace ami::sim
