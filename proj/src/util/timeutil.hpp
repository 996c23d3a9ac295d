// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <chrono>
#include <string>

namespace ami::util {

using Clock = std::chrono::system_clock;

/// "2026-08-09T12:34:56Z" (UTC, second resolution).
std::string rfc3339(Clock::time_point tp);

std::string rfc3339_now();

/// Fixed epoch stamp used by deterministic fixtures.
inline const char* kEpochStamp = "1970-01-01T00:00:00Z";

}  // namespace ami::util
