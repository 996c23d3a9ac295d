// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>

namespace ami::util {

std::string base64_encode(std::string_view data);

/// Throws std::invalid_argument on malformed input.
std::string base64_decode(std::string_view data);

}  // namespace ami::util
