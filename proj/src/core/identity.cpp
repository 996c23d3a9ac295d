// SPDX-License-Identifier: Apache-2.0
#include "core/identity.hpp"

#include "core/errors.hpp"
#include "util/strings.hpp"

namespace ami {

Identity Identity::make(std::string name, std::optional<std::string> date_of_birth,
                        std::map<std::string, std::string> attributes) {
    Identity id;
    id.name = util::trim(name);
    if (id.name.empty()) throw ValidationError("identity name is empty");
    if (date_of_birth && !date_of_birth->empty()) id.date_of_birth = *date_of_birth;
    id.attributes = std::move(attributes);
    return id;
}

bool operator==(const Identity& a, const Identity& b) {
    return a.name == b.name && a.date_of_birth == b.date_of_birth && a.attributes == b.attributes;
}

}  // namespace ami
