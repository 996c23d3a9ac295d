// SPDX-License-Identifier: Apache-2.0
#include "core/playbook.hpp"

#include <yaml-cpp/yaml.h>

#include <set>
#include <sstream>

#include "core/errors.hpp"
#include "util/fsutil.hpp"
#include "util/strings.hpp"

namespace ami {

namespace {

void validate(const Playbook& pb) {
    if (pb.questions.empty()) throw ValidationError("playbook has zero questions");
    std::set<std::string> seen;
    for (const auto& q : pb.questions) {
        if (q.id.empty()) throw ValidationError("question with empty id");
        if (!seen.insert(q.id).second)
            throw ValidationError("duplicate question id \"" + q.id + "\"");
        if (q.template_text.find("{name}") == std::string::npos)
            throw ValidationError("question \"" + q.id + "\" is missing the {name} placeholder");
        if (!(q.scale_min < q.scale_max))
            throw ValidationError("question \"" + q.id + "\" has scale_min >= scale_max");
    }
    if (pb.verdict_prompt.empty()) throw ValidationError("playbook verdict_prompt is empty");
}

Playbook from_yaml_node(const YAML::Node& root) {
    Playbook pb;
    pb.name = root["name"] ? root["name"].as<std::string>() : "unnamed";
    if (root["questions"]) {
        for (const auto& node : root["questions"]) {
            Question q;
            q.id = node["id"] ? node["id"].as<std::string>() : "";
            q.template_text = node["text"] ? node["text"].as<std::string>() : "";
            if (node["scale"]) {
                q.scale_min = node["scale"]["min"].as<double>(0.0);
                q.scale_max = node["scale"]["max"].as<double>(1.0);
            }
            pb.questions.push_back(std::move(q));
        }
    }
    pb.verdict_prompt = root["verdict_prompt"] ? root["verdict_prompt"].as<std::string>() : "";
    validate(pb);
    return pb;
}

}  // namespace

const Question* Playbook::find_question(const std::string& id) const {
    for (const auto& q : questions)
        if (q.id == id) return &q;
    return nullptr;
}

bool operator==(const Question& a, const Question& b) {
    return a.id == b.id && a.template_text == b.template_text && a.scale_min == b.scale_min &&
           a.scale_max == b.scale_max;
}

bool operator==(const Playbook& a, const Playbook& b) {
    return a.name == b.name && a.questions == b.questions && a.verdict_prompt == b.verdict_prompt;
}

Playbook parse_playbook_yaml(const std::string& yaml, const std::string& origin) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml);
    } catch (const YAML::ParserException& e) {
        throw ParseError("playbook " + origin + ": " + e.what());
    }
    try {
        return from_yaml_node(root);
    } catch (const YAML::Exception& e) {
        throw ParseError("playbook " + origin + ": " + e.what());
    }
}

Playbook load_playbook(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path))
        throw ValidationError("playbook file not found: " + path.string());
    return parse_playbook_yaml(util::read_file(path), path.string());
}

std::string playbook_to_yaml(const Playbook& pb) {
    YAML::Emitter out;
    out << YAML::BeginMap;
    out << YAML::Key << "name" << YAML::Value << pb.name;
    out << YAML::Key << "questions" << YAML::Value << YAML::BeginSeq;
    for (const auto& q : pb.questions) {
        out << YAML::BeginMap;
        out << YAML::Key << "id" << YAML::Value << q.id;
        out << YAML::Key << "text" << YAML::Value << q.template_text;
        out << YAML::Key << "scale" << YAML::Value << YAML::Flow << YAML::BeginMap;
        out << YAML::Key << "min" << YAML::Value << q.scale_min;
        out << YAML::Key << "max" << YAML::Value << q.scale_max;
        out << YAML::EndMap;
        out << YAML::EndMap;
    }
    out << YAML::EndSeq;
    out << YAML::Key << "verdict_prompt" << YAML::Value << pb.verdict_prompt;
    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

const std::string& default_playbook_yaml() {
    static const std::string yaml = R"(name: default
questions:
  - id: A
    text: "On a scale from 0 to 1, how confident are you that this document describes a person named {name}?"
    scale: { min: 0.0, max: 1.0 }
  - id: B
    text: "On a scale from 0 to 1, how negative is this description of {name}? Only consider explicitly stated facts."
    scale: { min: 0.0, max: 1.0 }
  - id: C
    text: "On a scale from 0 to 1, how high-risk is the activity attributed to {name}? Only use explicitly stated information."
    scale: { min: 0.0, max: 1.0 }
verdict_prompt: "How high-risk is doing business with this person, based on the context?"
)";
    return yaml;
}

Playbook default_playbook() { return parse_playbook_yaml(default_playbook_yaml(), "<default>"); }

std::string render_question(const Question& q, const Identity& identity) {
    return util::replace_all(q.template_text, "{name}", identity.name);
}

}  // namespace ami
