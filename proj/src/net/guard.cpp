// SPDX-License-Identifier: Apache-2.0
#include "net/guard.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace ami::net {

namespace {
std::mutex g_mutex;
bool g_armed = false;
std::vector<std::string> g_allowed;
std::atomic<int> g_violations{0};
}  // namespace

void NetworkGuard::arm(const std::vector<std::string>& allowed_origins) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_armed = true;
    g_allowed = allowed_origins;
    g_violations = 0;
}

void NetworkGuard::disarm() {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_armed = false;
    g_allowed.clear();
}

bool NetworkGuard::armed() {
    std::lock_guard<std::mutex> lock(g_mutex);
    return g_armed;
}

void NetworkGuard::allow(const std::string& origin) {
    std::lock_guard<std::mutex> lock(g_mutex);
    g_allowed.push_back(origin);
}

int NetworkGuard::violations() { return g_violations.load(); }

void NetworkGuard::check(const std::string& origin) {
    {
        std::lock_guard<std::mutex> lock(g_mutex);
        if (!g_armed) return;
        if (std::find(g_allowed.begin(), g_allowed.end(), origin) != g_allowed.end()) return;
    }
    g_violations.fetch_add(1);
    throw GuardViolation(origin);
}

}  // namespace ami::net
