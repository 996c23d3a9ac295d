// SPDX-License-Identifier: Apache-2.0
#include "evalharness/emit.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>

#include "util/csv.hpp"
#include "util/fsutil.hpp"
#include "util/strings.hpp"

namespace ami::eval {

namespace {
using nlohmann::json;

std::string fixed6(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}
}  // namespace

void emit_outputs(const EvalResult& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    // means.csv: one row per population (Table-style layout pivots on print)
    std::string means_csv = "model,population,mean_ami,scored,unscored\n";
    for (Population p : all_populations()) {
        auto it = result.means.find(p);
        means_csv += util::csv_row({result.model_id, population_key(p),
                                    it == result.means.end() ? "" : util::format_double(it->second),
                                    std::to_string(result.scored_counts.count(p)
                                                       ? result.scored_counts.at(p)
                                                       : 0),
                                    std::to_string(result.unscored_counts.count(p)
                                                       ? result.unscored_counts.at(p)
                                                       : 0)});
    }
    util::atomic_write_file(out_dir / "means.csv", means_csv);

    for (const auto& [population, points] : result.ecdf) {
        std::string csv = "score,fraction\n";
        for (const auto& [score, fraction] : points)
            csv += util::csv_row({util::format_double(score), util::format_double(fraction)});
        util::atomic_write_file(out_dir / ("ecdf_" + population_key(population) + ".csv"), csv);
    }

    std::string efficiency_csv = "mean_wall_ms,mean_tokens,mean_cost\n";
    efficiency_csv += util::csv_row(
        {fixed6(result.efficiency.mean_wall_ms), fixed6(result.efficiency.mean_tokens),
         result.efficiency.mean_cost ? util::format_double(*result.efficiency.mean_cost) : ""});
    util::atomic_write_file(out_dir / "efficiency.csv", efficiency_csv);

    json summary;
    summary["model"] = result.model_id;
    json means = json::object();
    for (const auto& [population, mean] : result.means) means[population_key(population)] = mean;
    summary["means"] = std::move(means);
    json counts = json::object();
    for (Population p : all_populations()) {
        counts[population_key(p)] = {
            {"scored", result.scored_counts.count(p) ? result.scored_counts.at(p) : 0},
            {"unscored", result.unscored_counts.count(p) ? result.unscored_counts.at(p) : 0}};
    }
    summary["sample_counts"] = std::move(counts);
    json separations = json::object();
    for (const auto& s : result.separations) {
        std::string key = population_key(s.high) + "_minus_" + population_key(s.low);
        separations[key] = s.delta ? json(*s.delta) : json(nullptr);
    }
    summary["separations"] = std::move(separations);
    json ecdf = json::object();
    for (const auto& [population, points] : result.ecdf) {
        json list = json::array();
        for (const auto& [score, fraction] : points)
            list.push_back({{"score", score}, {"fraction", fraction}});
        ecdf[population_key(population)] = std::move(list);
    }
    summary["ecdf"] = std::move(ecdf);
    summary["efficiency"] = {
        {"mean_wall_ms", result.efficiency.mean_wall_ms},
        {"mean_tokens", result.efficiency.mean_tokens},
        {"mean_cost",
         result.efficiency.mean_cost ? json(*result.efficiency.mean_cost) : json(nullptr)}};
    json per_sample = json::array();
    for (const auto& s : result.per_sample) {
        per_sample.push_back({{"name", s.sample.identity.name},
                              {"population", population_key(s.sample.population)},
                              {"ami_score", s.ami_score ? json(*s.ami_score) : json(nullptr)},
                              {"status", s.status}});
    }
    summary["per_sample"] = std::move(per_sample);
    util::atomic_write_file(out_dir / "summary.json", summary.dump(2) + "\n");
}

std::string format_means_table(const EvalResult& result) {
    std::string out = "model";
    for (Population p : all_populations()) out += "," + population_key(p);
    out += "\n" + (result.model_id.empty() ? std::string("(unknown)") : result.model_id);
    for (Population p : all_populations()) {
        auto it = result.means.find(p);
        out += ",";
        out += it == result.means.end() ? "-" : fixed6(it->second);
    }
    out += "\n";
    return out;
}

}  // namespace ami::eval
