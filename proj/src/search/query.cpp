// SPDX-License-Identifier: Apache-2.0
#include "search/query.hpp"

#include <map>

#include "util/strings.hpp"

namespace ami::search {

std::string build_query(const Identity& identity) {
    std::string name = util::replace_all(identity.name, "\"", "");
    std::string query = "\"" + util::trim(name) + "\"";

    // dob merges into the term list under key "dob" so ordering stays the
    // single sorted-by-key rule.
    std::map<std::string, std::string> terms = identity.attributes;
    if (identity.date_of_birth) terms["dob"] = *identity.date_of_birth;
    for (const auto& [key, value] : terms) {
        std::string term = util::collapse_whitespace(util::replace_all(value, "\"", ""));
        if (!term.empty()) query += " " + term;
    }
    return query;
}

std::string canonical_query(const std::string& query) { return util::collapse_whitespace(query); }

}  // namespace ami::search
