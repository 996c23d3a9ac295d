// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "core/identity.hpp"

namespace ami {

struct Question {
    std::string id;        // short token, e.g. "A"
    std::string template_text;  // contains at least one {name} placeholder
    double scale_min = 0.0;
    double scale_max = 1.0;
};

/// Ordered assessment questions plus the verdict prompt.
struct Playbook {
    std::string name;
    std::vector<Question> questions;
    std::string verdict_prompt;

    const Question* find_question(const std::string& id) const;
};

bool operator==(const Question& a, const Question& b);
bool operator==(const Playbook& a, const Playbook& b);

/// Parses and validates a playbook YAML file. Malformed YAML raises ParseError
/// with line info; invariant violations raise ValidationError naming the
/// offending question.
Playbook load_playbook(const std::filesystem::path& path);

/// Same schema, from a string (used for the bundled default).
Playbook parse_playbook_yaml(const std::string& yaml, const std::string& origin = "<string>");

std::string playbook_to_yaml(const Playbook& pb);

/// The bundled three-question playbook and its verdict prompt.
const std::string& default_playbook_yaml();
Playbook default_playbook();

/// Replaces every {name} placeholder with identity.name in a single pass;
/// substituted text is never re-scanned.
std::string render_question(const Question& q, const Identity& identity);

}  // namespace ami
