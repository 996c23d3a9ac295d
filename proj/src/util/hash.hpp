// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ami::util {

/// SHA-256 of the input, lowercase hex.
std::string sha256_hex(std::string_view data);

/// FNV-1a, used to fold text into deterministic seeds (not for security).
uint64_t fnv1a64(std::string_view data);

/// splitmix64 step; deterministic across platforms.
uint64_t splitmix64(uint64_t& state);

}  // namespace ami::util
