// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/identity.hpp"

namespace ami::eval {

/// The four populations in ascending risk order.
enum class Population { Clean, PEP, RW, SDN };

const std::vector<Population>& all_populations();
std::string population_key(Population p);        // "clean" | "pep" | "rw" | "sdn"
Population population_from_key(const std::string& key);  // case-insensitive; throws

struct PopulationSample {
    Population population = Population::Clean;
    Identity identity;
    std::string source;  // dataset provenance
};

/// CSV with header name,dob,attributes,source; attributes as
/// "key=value;key=value". Rows with empty names raise row-numbered errors.
std::vector<PopulationSample> load_population(const std::filesystem::path& path,
                                              Population label);

}  // namespace ami::eval
