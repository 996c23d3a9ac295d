// SPDX-License-Identifier: Apache-2.0
#include "evalharness/population.hpp"

#include "core/errors.hpp"
#include "util/csv.hpp"
#include "util/fsutil.hpp"
#include "util/strings.hpp"

namespace ami::eval {

const std::vector<Population>& all_populations() {
    static const std::vector<Population> populations = {Population::Clean, Population::PEP,
                                                        Population::RW, Population::SDN};
    return populations;
}

std::string population_key(Population p) {
    switch (p) {
    case Population::Clean: return "clean";
    case Population::PEP: return "pep";
    case Population::RW: return "rw";
    case Population::SDN: return "sdn";
    }
    return "clean";
}

Population population_from_key(const std::string& key) {
    std::string k = util::to_lower(util::trim(key));
    for (Population p : all_populations())
        if (population_key(p) == k) return p;
    throw ValidationError("unknown population label \"" + key + "\"");
}

std::vector<PopulationSample> load_population(const std::filesystem::path& path,
                                              Population label) {
    if (!std::filesystem::exists(path))
        throw ValidationError("population file not found: " + path.string());
    auto rows = util::parse_csv(util::read_file(path));
    if (rows.empty()) throw ValidationError("population file is empty: " + path.string());

    const auto& header = rows[0];
    auto column = [&](const std::string& name) -> int {
        for (size_t i = 0; i < header.size(); ++i)
            if (util::to_lower(util::trim(header[i])) == name) return static_cast<int>(i);
        return -1;
    };
    int name_col = column("name");
    int dob_col = column("dob");
    int attr_col = column("attributes");
    int source_col = column("source");
    if (name_col < 0)
        throw ValidationError("population file " + path.string() + " has no name column");

    auto field = [](const std::vector<std::string>& row, int col) -> std::string {
        return (col >= 0 && col < static_cast<int>(row.size())) ? row[static_cast<size_t>(col)]
                                                                : "";
    };

    std::vector<PopulationSample> samples;
    for (size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::string name = util::trim(field(row, name_col));
        if (name.empty())
            throw ValidationError("population file " + path.string() + ": empty name at row " +
                                  std::to_string(r + 1));
        std::map<std::string, std::string> attributes;
        for (const std::string& pair : util::split(field(row, attr_col), ';')) {
            if (util::trim(pair).empty()) continue;
            size_t eq = pair.find('=');
            if (eq == std::string::npos)
                throw ValidationError("population file " + path.string() + ": bad attribute \"" +
                                      pair + "\" at row " + std::to_string(r + 1));
            attributes[util::trim(pair.substr(0, eq))] = util::trim(pair.substr(eq + 1));
        }
        std::string dob = util::trim(field(row, dob_col));
        PopulationSample sample;
        sample.population = label;
        sample.identity = Identity::make(name, dob.empty() ? std::nullopt : std::optional(dob),
                                         std::move(attributes));
        sample.source = util::trim(field(row, source_col));
        samples.push_back(std::move(sample));
    }
    return samples;
}

}  // namespace ami::eval
