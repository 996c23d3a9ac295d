// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

namespace ami::crawl {

/// Rules extracted from one robots.txt for a given user-agent token
/// (specific group preferred over "*").
struct RobotsRules {
    std::vector<std::string> disallow;
    std::vector<std::string> allow;
};

RobotsRules parse_robots(const std::string& body, const std::string& ua_token);

/// Longest matching prefix wins; Allow wins a length tie. No rule = allowed.
bool robots_allowed(const RobotsRules& rules, const std::string& path);

}  // namespace ami::crawl
