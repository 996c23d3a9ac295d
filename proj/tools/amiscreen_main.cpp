// SPDX-License-Identifier: Apache-2.0
//
// amiscreen CLI: screen | eval | snapshot, all through the C API.
#include <amiscreen/amiscreen.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNoEvidence = 2;
constexpr int kExitUsage = 64;

void print_progress(const char* message, void*) { std::cerr << message << "\n"; }

struct EngineHandle {
    ami_engine* engine = nullptr;
    ~EngineHandle() { ami_engine_destroy(engine); }
};

struct OwnedString {
    char* value = nullptr;
    ~OwnedString() { ami_string_free(value); }
};

int map_status(ami_status status) {
    switch (status) {
    case AMI_OK: return kExitOk;
    case AMI_NO_EVIDENCE: return kExitNoEvidence;
    case AMI_USAGE: return kExitUsage;
    default: return kExitError;
    }
}

json load_config_file(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open config file " << path << "\n";
        std::exit(kExitError);
    }
    try {
        json j;
        in >> j;
        return j;
    } catch (const json::parse_error& e) {
        std::cerr << "error: config file " << path << ": " << e.what() << "\n";
        std::exit(kExitError);
    }
}

struct CommonFlags {
    std::string config_path;
    std::string backend_profile;
    std::string snapshot;
    int top_n = 0;
    int top_k = 0;
    int max_concurrency = 0;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON config file");
        cmd->add_option("--backend-profile", backend_profile,
                        "Backend profile: api (1000-token chunks) or local (500)");
        cmd->add_option("--snapshot", snapshot,
                        "Snapshot directory; sets fully offline replay mode");
        cmd->add_option("--top-n", top_n, "Search results to retrieve (default 10)");
        cmd->add_option("--top-k", top_k, "Chunks per (question, document) query (default 5)");
        cmd->add_option("--max-concurrency", max_concurrency,
                        "Concurrent fetches/assessments (default 4)");
    }

    json overrides(const std::string& playbook_path = "") const {
        json j = json::object();
        if (!backend_profile.empty()) j["backend_profile"] = backend_profile;
        if (!snapshot.empty()) j["snapshot_path"] = snapshot;
        if (top_n > 0) j["top_n_results"] = top_n;
        if (top_k > 0) j["top_k_chunks"] = top_k;
        if (max_concurrency > 0) j["max_concurrency"] = max_concurrency;
        if (!playbook_path.empty()) j["playbook_path"] = playbook_path;
        return j;
    }
};

int create_engine(const CommonFlags& flags, const std::string& playbook_path,
                  EngineHandle& handle) {
    json config{{"base", load_config_file(flags.config_path)},
                {"overrides", flags.overrides(playbook_path)}};
    ami_status status = ami_engine_create(config.dump().c_str(), &handle.engine);
    if (status != AMI_OK) {
        std::cerr << "error: " << ami_last_error(handle.engine) << "\n";
        return map_status(status);
    }
    ami_engine_set_progress(handle.engine, print_progress, nullptr);
    return kExitOk;
}

void print_screen_summary(const json& report) {
    std::cout << "subject: " << report["identity"]["name"].get<std::string>() << "\n";
    if (report.contains("verdict")) {
        std::cout << "ami_score: " << report["verdict"]["ami_score"].get<double>() << "\n";
        std::cout << "summary: " << report["verdict"]["summary"].get<std::string>() << "\n";
    } else {
        std::cout << "status: " << report["status"].get<std::string>() << "\n";
    }
    std::cout << "question means:\n";
    for (const auto& q : report["question_summaries"]) {
        std::cout << "  " << q["question_id"].get<std::string>() << ": ";
        if (q["mean_score"].is_null()) std::cout << "-";
        else std::cout << q["mean_score"].get<double>();
        std::cout << "  (" << q["assessed"].get<int>() << " assessed, "
                  << q["failed"].get<int>() << " failed)\n";
    }
    // top justification excerpts: highest-scoring successful assessments
    std::vector<std::pair<double, std::string>> scored;
    for (const auto& a : report["assessments"]) {
        if (a["status"] != "ok") continue;
        std::string excerpt = a["justification"].get<std::string>();
        if (excerpt.size() > 160) excerpt = excerpt.substr(0, 157) + "...";
        scored.emplace_back(a["score"].get<double>(),
                            a["question_id"].get<std::string>() + " " +
                                a["doc_url"].get<std::string>() + ": " + excerpt);
    }
    std::sort(scored.begin(), scored.end(),
              [](const auto& x, const auto& y) { return x.first > y.first; });
    if (!scored.empty()) std::cout << "top justifications:\n";
    for (size_t i = 0; i < scored.size() && i < 3; ++i)
        std::cout << "  [" << scored[i].first << "] " << scored[i].second << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"amiscreen: adverse-media screening with an LLM-over-RAG playbook"};
    app.require_subcommand(1);

    // screen
    auto* screen = app.add_subcommand("screen", "Screen one person and write a report");
    std::string name;
    std::string dob;
    std::vector<std::string> attrs;
    std::string playbook_path;
    std::string out_path = "report.json";
    CommonFlags screen_flags;
    screen->add_option("--name", name, "Person to screen")->required();
    screen->add_option("--dob", dob, "Date of birth (YYYY-MM-DD)");
    screen->add_option("--attr", attrs, "Extra attribute key=value (repeatable)");
    screen->add_option("--playbook", playbook_path, "Playbook YAML path (default: bundled)");
    screen->add_option("--out", out_path, "Report output path (default report.json)");
    screen_flags.add_to(screen);

    // eval
    auto* eval = app.add_subcommand("eval", "Run the population evaluation protocol");
    std::string dataset_dir;
    std::string eval_out = "eval_out";
    std::string eval_playbook;
    CommonFlags eval_flags;
    eval->add_option("--dataset", dataset_dir, "Directory with clean/pep/rw/sdn CSVs")->required();
    eval->add_option("--out", eval_out, "Output directory (default eval_out)");
    eval->add_option("--playbook", eval_playbook, "Playbook YAML path (default: bundled)");
    eval_flags.add_to(eval);

    // snapshot
    auto* snapshot = app.add_subcommand("snapshot", "Record or verify snapshots");
    snapshot->require_subcommand(1);
    auto* record = snapshot->add_subcommand("record", "Record search (and page) snapshots");
    std::vector<std::string> record_names;
    std::string record_out;
    bool with_pages = false;
    CommonFlags record_flags;
    record->add_option("--name", record_names, "Name to record (repeatable)")->required();
    record->add_option("--out", record_out, "Snapshot directory")->required();
    record->add_flag("--with-pages", with_pages, "Also record page bodies");
    record_flags.add_to(record);
    auto* verify = snapshot->add_subcommand("verify", "Verify snapshot integrity");
    std::string verify_path;
    verify->add_option("--snapshot", verify_path, "Snapshot directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    if (screen->parsed()) {
        EngineHandle handle;
        int rc = create_engine(screen_flags, playbook_path, handle);
        if (rc != kExitOk) return rc;

        json identity{{"name", name}};
        if (!dob.empty()) identity["dob"] = dob;
        json attributes = json::object();
        for (const auto& kv : attrs) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --attr expects key=value, got \"" << kv << "\"\n";
                return kExitUsage;
            }
            attributes[kv.substr(0, eq)] = kv.substr(eq + 1);
        }
        if (!attributes.empty()) identity["attributes"] = attributes;

        OwnedString report_json;
        ami_status status = ami_screen(handle.engine, identity.dump().c_str(), &report_json.value);
        if (!report_json.value) {
            std::cerr << "error: " << ami_last_error(handle.engine) << "\n";
            return map_status(status);
        }
        std::ofstream out(out_path, std::ios::binary);
        out << report_json.value;
        out.close();
        std::cerr << "report written to " << out_path << "\n";
        print_screen_summary(json::parse(report_json.value));
        if (status == AMI_ERROR) std::cerr << "error: " << ami_last_error(handle.engine) << "\n";
        return map_status(status);
    }

    if (eval->parsed()) {
        EngineHandle handle;
        int rc = create_engine(eval_flags, eval_playbook, handle);
        if (rc != kExitOk) return rc;
        OwnedString summary;
        OwnedString table;
        ami_status status =
            ami_eval(handle.engine, dataset_dir.c_str(), eval_out.c_str(), &summary.value,
                     &table.value);
        if (status != AMI_OK) {
            std::cerr << "error: " << ami_last_error(handle.engine) << "\n";
            return map_status(status);
        }
        std::cout << table.value;
        std::cerr << "outputs written to " << eval_out << "\n";
        return kExitOk;
    }

    if (record->parsed()) {
        EngineHandle handle;
        int rc = create_engine(record_flags, "", handle);
        if (rc != kExitOk) return rc;
        std::vector<const char*> name_ptrs;
        for (const auto& n : record_names) name_ptrs.push_back(n.c_str());
        ami_status status = ami_snapshot_record(handle.engine, name_ptrs.data(),
                                                name_ptrs.size(), record_out.c_str(),
                                                with_pages ? 1 : 0);
        if (status != AMI_OK) {
            std::cerr << "error: " << ami_last_error(handle.engine) << "\n";
            return map_status(status);
        }
        std::cerr << "snapshot written to " << record_out << "\n";
        return kExitOk;
    }

    if (verify->parsed()) {
        OwnedString error;
        ami_status status = ami_snapshot_verify(verify_path.c_str(), &error.value);
        if (status != AMI_OK) {
            std::cerr << "error: " << (error.value ? error.value : "verification failed") << "\n";
            return kExitError;
        }
        std::cout << "snapshot ok: " << verify_path << "\n";
        return kExitOk;
    }

    return kExitUsage;
}
