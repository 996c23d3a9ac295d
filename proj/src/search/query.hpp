// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "core/identity.hpp"

namespace ami::search {

/// Exact name in quotes, then dob and attribute values as unquoted terms
/// sorted by key. Internal quotes in the name are stripped.
std::string build_query(const Identity& identity);

/// Snapshot key form: trimmed, internal whitespace collapsed, case preserved.
std::string canonical_query(const std::string& query);

}  // namespace ami::search
