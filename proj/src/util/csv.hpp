// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ami::util {

/// Parses CSV with double-quote quoting ("" escapes a quote inside a quoted
/// field). Accepts \n and \r\n line endings; a trailing newline does not
/// produce an empty record. Throws std::runtime_error with a line number on
/// malformed quoting.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Quotes a field only when it contains a comma, quote, or newline.
std::string csv_field(std::string_view field);

std::string csv_row(const std::vector<std::string>& fields);

}  // namespace ami::util
