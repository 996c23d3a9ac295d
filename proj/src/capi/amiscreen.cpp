// SPDX-License-Identifier: Apache-2.0
#include "amiscreen/amiscreen.h"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>

#include "core/config.hpp"
#include "core/errors.hpp"
#include "core/playbook.hpp"
#include "crawler/crawl.hpp"
#include "crawler/page_store.hpp"
#include "evalharness/emit.hpp"
#include "evalharness/protocol.hpp"
#include "pipeline/screen.hpp"
#include "search/filter.hpp"
#include "search/google.hpp"
#include "search/query.hpp"
#include "search/snapshot.hpp"
#include "util/fsutil.hpp"
#include "util/hash.hpp"

using nlohmann::json;

struct ami_engine {
    ami::RunConfig config;
    ami::Playbook playbook;
    std::string last_error;
    ami_progress_fn progress_fn = nullptr;
    void* progress_data = nullptr;
    std::mutex mutex;

    void progress(const std::string& message) {
        if (progress_fn) progress_fn(message.c_str(), progress_data);
    }
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_error(ami_engine* engine, const std::string& message) {
    if (engine) engine->last_error = message;
}

ami::Identity identity_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ami::ValidationError(std::string("identity JSON: ") + e.what());
    }
    std::map<std::string, std::string> attributes;
    if (j.contains("attributes")) {
        for (const auto& [k, v] : j.at("attributes").items())
            attributes[k] = v.get<std::string>();
    }
    std::optional<std::string> dob;
    if (j.contains("dob") && j.at("dob").is_string()) dob = j.at("dob").get<std::string>();
    if (j.contains("date_of_birth") && j.at("date_of_birth").is_string())
        dob = j.at("date_of_birth").get<std::string>();
    return ami::Identity::make(j.value("name", ""), dob, std::move(attributes));
}

}  // namespace

extern "C" {

const char* ami_version(void) { return "1.0.0"; }

ami_status ami_engine_create(const char* config_json, ami_engine** out_engine) {
    if (!out_engine) return AMI_USAGE;
    *out_engine = nullptr;
    auto engine = std::make_unique<ami_engine>();
    try {
        json wrapper = json::object();
        if (config_json && *config_json) wrapper = json::parse(config_json);
        json base = wrapper.value("base", json::object());
        json overrides = wrapper.value("overrides", json::object());

        std::string profile = "api";
        if (base.contains("backend_profile")) profile = base["backend_profile"].get<std::string>();
        if (overrides.contains("backend_profile"))
            profile = overrides["backend_profile"].get<std::string>();

        engine->config.apply_profile(profile);
        engine->config.apply_json(base);
        engine->config.apply_env();
        engine->config.apply_json(overrides);
        engine->config.validate();

        std::string playbook_path = base.value("playbook_path", "");
        if (overrides.contains("playbook_path"))
            playbook_path = overrides["playbook_path"].get<std::string>();
        engine->playbook = playbook_path.empty() ? ami::default_playbook()
                                                 : ami::load_playbook(playbook_path);
    } catch (const std::exception& e) {
        // creation failures have no engine to query: report through stderr-free
        // channel by returning a dead engine carrying the message
        engine->last_error = e.what();
        *out_engine = engine.release();
        return AMI_ERROR;
    }
    *out_engine = engine.release();
    return AMI_OK;
}

void ami_engine_destroy(ami_engine* engine) { delete engine; }

const char* ami_last_error(const ami_engine* engine) {
    return engine ? engine->last_error.c_str() : "";
}

void ami_engine_set_progress(ami_engine* engine, ami_progress_fn fn, void* user_data) {
    if (!engine) return;
    engine->progress_fn = fn;
    engine->progress_data = user_data;
}

ami_status ami_engine_config(ami_engine* engine, char** out_json) {
    if (!engine || !out_json) return AMI_USAGE;
    std::lock_guard<std::mutex> lock(engine->mutex);
    try {
        json j = engine->config.to_json(true);
        j["config_digest"] = engine->config.digest();
        j["playbook_name"] = engine->playbook.name;
        *out_json = dup_string(j.dump(2) + "\n");
        return AMI_OK;
    } catch (const std::exception& e) {
        set_error(engine, e.what());
        return AMI_ERROR;
    }
}

ami_status ami_screen(ami_engine* engine, const char* identity_json, char** out_report_json) {
    if (!engine || !identity_json || !out_report_json) return AMI_USAGE;
    std::lock_guard<std::mutex> lock(engine->mutex);
    *out_report_json = nullptr;
    try {
        ami::Identity identity = identity_from_json(identity_json);
        engine->progress("screening: " + identity.name);
        ami::pipeline::Backends backends = ami::pipeline::Backends::resolve(engine->config);
        ami::pipeline::ScreeningReport report =
            ami::pipeline::screen(identity, engine->playbook, engine->config, backends);
        *out_report_json = dup_string(report.to_json_string());
        if (report.status == "no_evidence") return AMI_NO_EVIDENCE;
        if (report.status == "ok") return AMI_OK;
        set_error(engine, "screening finished with status " + report.status +
                              (report.error.empty() ? "" : ": " + report.error));
        return AMI_ERROR;
    } catch (const std::exception& e) {
        set_error(engine, e.what());
        return AMI_ERROR;
    }
}

ami_status ami_eval(ami_engine* engine, const char* dataset_dir, const char* out_dir,
                    char** out_summary_json, char** out_table_text) {
    if (!engine || !dataset_dir || !out_dir) return AMI_USAGE;
    std::lock_guard<std::mutex> lock(engine->mutex);
    try {
        std::vector<ami::eval::PopulationSample> samples;
        bool any_file = false;
        for (ami::eval::Population p : ami::eval::all_populations()) {
            std::filesystem::path file =
                std::filesystem::path(dataset_dir) / (ami::eval::population_key(p) + ".csv");
            if (!std::filesystem::exists(file)) {
                engine->progress("warning: missing population file " + file.string() +
                                 ", proceeding without it");
                continue;
            }
            any_file = true;
            auto loaded = ami::eval::load_population(file, p);
            samples.insert(samples.end(), loaded.begin(), loaded.end());
        }
        if (!any_file)
            throw ami::ValidationError("no population CSVs found under " +
                                       std::string(dataset_dir));

        ami::pipeline::Backends backends = ami::pipeline::Backends::resolve(engine->config);
        ami::eval::EvalResult result = ami::eval::run_protocol(
            samples, engine->playbook, engine->config, backends,
            [&](const std::string& m) { engine->progress(m); });
        ami::eval::emit_outputs(result, out_dir);

        if (out_table_text) *out_table_text = dup_string(ami::eval::format_means_table(result));
        if (out_summary_json)
            *out_summary_json =
                dup_string(ami::util::read_file(std::filesystem::path(out_dir) / "summary.json"));
        return AMI_OK;
    } catch (const std::exception& e) {
        set_error(engine, e.what());
        return AMI_ERROR;
    }
}

ami_status ami_snapshot_record(ami_engine* engine, const char* const* names, size_t n_names,
                               const char* snapshot_dir, int with_pages) {
    if (!engine || !names || !snapshot_dir || n_names == 0) return AMI_USAGE;
    std::lock_guard<std::mutex> lock(engine->mutex);
    try {
        ami::RunConfig live_config = engine->config;
        live_config.snapshot_path.clear();  // recording is inherently live
        ami::search::GoogleSearchClient provider(live_config.search, live_config.http_proxy);

        std::vector<std::string> queries;
        for (size_t i = 0; i < n_names; ++i)
            queries.push_back(ami::search::build_query(ami::Identity::make(names[i])));

        std::filesystem::path dir(snapshot_dir);
        ami::search::SearchSnapshot snapshot = ami::search::record_snapshot(
            provider, queries, live_config.top_n_results, dir / "search.json");
        engine->progress("recorded " + std::to_string(snapshot.entries.size()) +
                         " search entries");

        if (with_pages) {
            ami::crawl::PageStore store(dir);
            for (const auto& [query, results] : snapshot.entries) {
                ami::crawl::crawl_results(results, live_config, &store);
                engine->progress("recorded pages for query " + query);
            }
        }
        return AMI_OK;
    } catch (const std::exception& e) {
        set_error(engine, e.what());
        return AMI_ERROR;
    }
}

ami_status ami_snapshot_verify(const char* snapshot_dir, char** out_error) {
    if (!snapshot_dir) return AMI_USAGE;
    if (out_error) *out_error = nullptr;
    try {
        std::filesystem::path dir(snapshot_dir);
        ami::search::verify_snapshot(dir / "search.json");
        std::filesystem::path pages = dir / "pages";
        if (std::filesystem::exists(pages)) {
            for (const auto& entry : std::filesystem::directory_iterator(pages)) {
                if (entry.path().extension() != ".json") continue;
                json j;
                std::string url;
                try {
                    j = json::parse(ami::util::read_file(entry.path()));
                    url = j.at("url").get<std::string>();
                    (void)j.at("status").get<int>();
                    (void)j.at("body_base64").get<std::string>();
                } catch (const std::exception& e) {
                    throw ami::ValidationError("page snapshot " + entry.path().string() + ": " +
                                               e.what());
                }
                std::string expected = ami::util::sha256_hex(url) + ".json";
                if (entry.path().filename() != expected)
                    throw ami::ValidationError("page snapshot " + entry.path().string() +
                                               ": filename does not match sha256(url)");
            }
        }
        return AMI_OK;
    } catch (const std::exception& e) {
        if (out_error) *out_error = dup_string(e.what());
        return AMI_ERROR;
    }
}

ami_status ami_playbook_check(const char* playbook_path, char** out_error) {
    if (!playbook_path) return AMI_USAGE;
    if (out_error) *out_error = nullptr;
    try {
        ami::load_playbook(playbook_path);
        return AMI_OK;
    } catch (const std::exception& e) {
        if (out_error) *out_error = dup_string(e.what());
        return AMI_ERROR;
    }
}

void ami_string_free(char* s) { std::free(s); }

}  // extern "C"
