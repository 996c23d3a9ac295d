// SPDX-License-Identifier: Apache-2.0
#include "crawler/robots.hpp"

#include "util/strings.hpp"

namespace ami::crawl {

RobotsRules parse_robots(const std::string& body, const std::string& ua_token) {
    RobotsRules star_rules;
    RobotsRules specific_rules;
    bool saw_specific = false;

    bool group_star = false;
    bool group_specific = false;
    bool in_agent_lines = false;
    std::string token = util::to_lower(ua_token);

    for (const std::string& raw_line : util::split(body, '\n')) {
        std::string line = raw_line;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = util::trim(line);
        if (line.empty()) continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos) continue;
        std::string key = util::to_lower(util::trim(line.substr(0, colon)));
        std::string value = util::trim(line.substr(colon + 1));

        if (key == "user-agent") {
            if (!in_agent_lines) {
                group_star = false;
                group_specific = false;
            }
            in_agent_lines = true;
            std::string agent = util::to_lower(value);
            if (agent == "*") group_star = true;
            if (!agent.empty() && agent != "*" &&
                (token.find(agent) != std::string::npos || agent.find(token) != std::string::npos)) {
                group_specific = true;
                saw_specific = true;
            }
            continue;
        }
        in_agent_lines = false;
        if (key == "disallow" || key == "allow") {
            if (value.empty() && key == "disallow") continue;  // "Disallow:" = allow all
            if (group_star) (key == "disallow" ? star_rules.disallow : star_rules.allow).push_back(value);
            if (group_specific)
                (key == "disallow" ? specific_rules.disallow : specific_rules.allow).push_back(value);
        }
    }
    return saw_specific ? specific_rules : star_rules;
}

bool robots_allowed(const RobotsRules& rules, const std::string& path) {
    size_t best_disallow = 0;
    size_t best_allow = 0;
    for (const auto& p : rules.disallow) {
        if (util::starts_with(path, p)) best_disallow = std::max(best_disallow, p.size());
    }
    for (const auto& p : rules.allow) {
        if (util::starts_with(path, p)) best_allow = std::max(best_allow, p.size());
    }
    if (best_disallow == 0) return true;
    return best_allow >= best_disallow;
}

}  // namespace ami::crawl
