// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <optional>
#include <string>

namespace ami {

/// The screening subject. Immutable after construction; attribute keys are
/// unique by construction of the map.
struct Identity {
    std::string name;
    std::optional<std::string> date_of_birth;       // ISO "YYYY-MM-DD"
    std::map<std::string, std::string> attributes;  // nationality, affiliation, ...

    /// Trims the name and checks invariants. Throws ValidationError.
    static Identity make(std::string name, std::optional<std::string> date_of_birth = {},
                         std::map<std::string, std::string> attributes = {});
};

bool operator==(const Identity& a, const Identity& b);

}  // namespace ami
