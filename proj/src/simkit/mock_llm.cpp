// SPDX-License-Identifier: Apache-2.0
#include "simkit/mock_llm.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <thread>

#include "util/strings.hpp"

namespace ami::sim {

namespace {
using nlohmann::json;

constexpr const char* kVerdictMarker = "\nFinal question:";

// Pulls per-question score lists out of a verdict prompt of the form:
//   Question A: <text>
//   - source: <url> | score: <num> | justification: ...
std::map<std::string, std::vector<double>> parse_verdict_scores(const std::string& prompt) {
    std::map<std::string, std::vector<double>> by_question;
    std::string current;
    for (const std::string& line : util::split(prompt, '\n')) {
        if (util::starts_with(line, "Question ")) {
            size_t colon = line.find(':');
            if (colon != std::string::npos) current = line.substr(9, colon - 9);
            continue;
        }
        if (util::starts_with(line, "- source:") && !current.empty()) {
            size_t score_pos = line.find("| score: ");
            if (score_pos == std::string::npos) continue;
            size_t value_start = score_pos + 9;
            size_t value_end = line.find(' ', value_start);
            std::string value = line.substr(value_start, value_end == std::string::npos
                                                             ? std::string::npos
                                                             : value_end - value_start);
            try {
                by_question[current].push_back(std::stod(value));
            } catch (const std::exception&) {
                // unparseable score line: skipped
            }
        }
    }
    return by_question;
}

double verdict_score(const RuleBasedScorer& scorer, const std::string& prompt) {
    auto by_question = parse_verdict_scores(prompt);
    std::vector<double> means;
    for (const auto& [id, scores] : by_question) {
        if (scores.empty()) continue;
        double sum = 0.0;
        for (double s : scores) sum += s;
        means.push_back(sum / static_cast<double>(scores.size()));
    }
    if (means.empty()) return scorer.default_score;
    if (scorer.verdict_mode == VerdictMode::MaxQuestion) {
        double best = means[0];
        for (double m : means) best = std::max(best, m);
        return best;
    }
    double sum = 0.0;
    for (double m : means) sum += m;
    return sum / static_cast<double>(means.size());
}

}  // namespace

std::pair<double, std::string> MockLlm::score_text(const RuleBasedScorer& scorer,
                                                   const std::string& text) {
    std::string lower = util::to_lower(text);
    double best = scorer.default_score;
    std::string matched;
    for (const auto& [keyword, weight] : scorer.keyword_weights) {
        if (lower.find(keyword) != std::string::npos && weight > best) {
            best = weight;
            matched = keyword;
        }
    }
    if (matched.empty())
        return {scorer.default_score, "no adverse keywords found in the context"};
    return {best, "context mentions \"" + matched + "\""};
}

MockLlm::MockLlm(RuleBasedScorer scorer, LlmFaults faults)
    : scorer_(std::move(scorer)), faults_(std::move(faults)) {
    server_ = std::make_unique<LocalServer>([this](const SimRequest& r) { return handle(r); });
}

SimResponse MockLlm::handle(const SimRequest& req) {
    if (faults_.latency_ms > 0)
        std::this_thread::sleep_for(std::chrono::milliseconds(faults_.latency_ms));
    if (req.path != "/v1/chat/completions") return SimResponse{404, "application/json", "{}"};

    json body;
    try {
        body = json::parse(req.body);
    } catch (const json::parse_error&) {
        return SimResponse{400, "application/json", R"({"error":"bad json"})"};
    }

    std::string user_content;
    long long prompt_chars = 0;
    for (const auto& msg : body.value("messages", json::array())) {
        std::string content = msg.value("content", "");
        prompt_chars += static_cast<long long>(content.size());
        if (msg.value("role", "") == "user") user_content = content;
    }
    bool is_verdict = user_content.find(kVerdictMarker) != std::string::npos;

    int request_index;
    bool drop;
    bool malformed;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        request_index = static_cast<int>(calls_.size());
        drop = faults_.transport_at.count(request_index) > 0;
        malformed = !drop && (faults_.malformed_at.count(request_index) > 0 ||
                              (faults_.malformed_first > 0 && replies_ < faults_.malformed_first));
        if (malformed || !drop) ++replies_;
    }

    std::string content;
    if (malformed) {
        content = "Here is my assessment, score: high riskiness detected.";
    } else {
        double score;
        std::string justification;
        if (is_verdict) {
            score = verdict_score(scorer_, user_content);
            justification = "rule-based verdict over the accumulated evidence";
        } else {
            std::tie(score, justification) = score_text(scorer_, user_content);
        }
        content = json{{"score", score}, {"justification", justification}}.dump();
    }

    long long prompt_tokens = prompt_chars / 4;
    long long completion_tokens = static_cast<long long>(content.size()) / 4;

    LlmCallRecord record;
    record.index = request_index;
    record.is_verdict = is_verdict;
    record.faulted = drop || malformed;
    record.model = body.value("model", "mock-llm");
    record.user_content = user_content;
    record.prompt_tokens = drop ? 0 : prompt_tokens;
    record.completion_tokens = drop ? 0 : completion_tokens;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        calls_.push_back(record);
    }

    if (drop) return SimResponse{.drop_connection = true};

    json res{{"id", "mock-" + std::to_string(request_index)},
             {"object", "chat.completion"},
             {"model", record.model},
             {"choices", json::array({json{{"index", 0},
                                           {"message", {{"role", "assistant"},
                                                        {"content", content}}},
                                           {"finish_reason", "stop"}}})},
             {"usage", {{"prompt_tokens", prompt_tokens},
                        {"completion_tokens", completion_tokens},
                        {"total_tokens", prompt_tokens + completion_tokens}}}};
    return SimResponse{200, "application/json", res.dump()};
}

std::vector<LlmCallRecord> MockLlm::calls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return calls_;
}

int MockLlm::call_count() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<int>(calls_.size());
}

int MockLlm::verdict_calls() const {
    std::lock_guard<std::mutex> lock(mutex_);
    int n = 0;
    for (const auto& c : calls_) n += c.is_verdict ? 1 : 0;
    return n;
}

long long MockLlm::total_prompt_tokens() const {
    std::lock_guard<std::mutex> lock(mutex_);
    long long total = 0;
    for (const auto& c : calls_) total += c.prompt_tokens;
    return total;
}

long long MockLlm::total_completion_tokens() const {
    std::lock_guard<std::mutex> lock(mutex_);
    long long total = 0;
    for (const auto& c : calls_) total += c.completion_tokens;
    return total;
}

}  // namespace ami::sim
