// SPDX-License-Identifier: Apache-2.0
#include "agent/score.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

#include "core/errors.hpp"
#include "util/strings.hpp"

namespace ami::agent {

namespace {
using nlohmann::json;

std::string strip_code_fences(const std::string& reply) {
    std::string text = util::trim(reply);
    size_t open = text.find("```");
    if (open == std::string::npos) return text;
    size_t body_start = text.find('\n', open);
    if (body_start == std::string::npos) return text;
    size_t close = text.find("```", body_start);
    if (close == std::string::npos) return text;
    return util::trim(text.substr(body_start + 1, close - body_start - 1));
}

std::string score_system_prompt(double scale_min, double scale_max) {
    return "You are a compliance analyst screening adverse media about a person. "
           "Answer using only the provided context. Reply with exactly one JSON object "
           "of the form {\"score\": number, \"justification\": string} and nothing else. "
           "The score must be a number between " + util::format_double(scale_min) + " and " +
           util::format_double(scale_max) + ".";
}

constexpr const char* kRepairInstruction =
    "Your previous reply was not a valid JSON object of the form "
    "{\"score\": number, \"justification\": string}. Reply again with exactly that JSON "
    "object and nothing else.";

}  // namespace

double normalize_score(double raw, double scale_min, double scale_max, bool& clamped) {
    double s = raw;
    clamped = false;
    if (s < scale_min) {
        s = scale_min;
        clamped = true;
    } else if (s > scale_max) {
        s = scale_max;
        clamped = true;
    }
    return (s - scale_min) / (scale_max - scale_min);
}

void parse_score_reply(const std::string& reply, double& score, std::string& justification) {
    std::string text = strip_code_fences(reply);
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("reply is not JSON: ") + e.what());
    }
    if (!j.is_object() || j.size() != 2 || !j.contains("score") || !j.contains("justification"))
        throw ParseError("reply must be an object with exactly the keys score and justification");
    if (!j["score"].is_number()) throw ParseError("score is not a number");
    if (!j["justification"].is_string()) throw ParseError("justification is not a string");
    score = j["score"].get<double>();
    justification = j["justification"].get<std::string>();
    if (util::trim(justification).empty()) throw ParseError("justification is empty");
}

ScoreOutcome ask_score_raw(ChatClient& chat, const std::string& system_prompt,
                           const std::string& user_prompt, double scale_min, double scale_max,
                           int parse_retries) {
    std::vector<ChatMessage> messages{{"system", system_prompt}, {"user", user_prompt}};

    ScoreOutcome out;
    std::string reply;
    for (int round = 0; round <= parse_retries; ++round) {
        try {
            reply = chat.complete(messages);
        } catch (const TransportError&) {
            out.failure_reason = "transport";
            return out;
        }
        double raw_score = 0.0;
        std::string justification;
        try {
            parse_score_reply(reply, raw_score, justification);
        } catch (const ParseError&) {
            messages.push_back({"assistant", reply});
            messages.push_back({"user", kRepairInstruction});
            continue;
        }
        ScoreResponse res;
        bool clamped = false;
        res.score = normalize_score(raw_score, scale_min, scale_max, clamped);
        if (clamped)
            res.warnings.push_back("score " + util::format_double(raw_score) +
                                   " outside [" + util::format_double(scale_min) + ", " +
                                   util::format_double(scale_max) + "], clamped");
        res.justification = std::move(justification);
        res.raw = reply;
        res.retries_used = round;
        out.ok = true;
        out.response = std::move(res);
        return out;
    }
    out.failure_reason = "parse_error";
    out.raw = reply;
    return out;
}

ScoreOutcome ask_score(ChatClient& chat, const std::string& context,
                       const std::string& question_prompt, double scale_min, double scale_max,
                       int parse_retries) {
    std::string user = "Context:\n" + context + "\nQuestion: " + question_prompt;
    return ask_score_raw(chat, score_system_prompt(scale_min, scale_max), user, scale_min,
                         scale_max, parse_retries);
}

}  // namespace ami::agent
