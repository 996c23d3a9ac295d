// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ami::util {

std::string trim(std::string_view s);
std::string to_lower(std::string_view s);

/// Collapses every run of whitespace to a single space and trims the ends.
std::string collapse_whitespace(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

std::vector<std::string> split(std::string_view s, char sep);

std::string replace_all(std::string_view s, std::string_view from, std::string_view to);

/// Formats a double with enough digits to round-trip exactly.
std::string format_double(double v);

/// Truncates to at most `max_chars`, appending `marker` when cut.
std::string elide(std::string_view s, size_t max_chars, std::string_view marker);

}  // namespace ami::util
