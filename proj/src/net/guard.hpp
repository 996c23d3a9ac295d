// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ami::net {

/// Process-wide allowlist gate on outgoing connections. Every connection the
/// engine makes passes through HttpClient, which consults this guard before
/// opening a socket. While armed, a connection to an endpoint not on the
/// allowlist throws and is counted, so offline tests can prove that no live
/// network operation happened.
class NetworkGuard {
public:
    static void arm(const std::vector<std::string>& allowed_origins);
    static void disarm();
    static bool armed();

    /// Registers one more allowed origin ("http://127.0.0.1:8123") while armed.
    static void allow(const std::string& origin);

    static int violations();

    /// Called by HttpClient. Throws GuardViolation if armed and not allowed.
    static void check(const std::string& origin);
};

struct GuardViolation : std::runtime_error {
    explicit GuardViolation(const std::string& origin)
        : std::runtime_error("network guard: blocked connection to " + origin) {}
};

}  // namespace ami::net
