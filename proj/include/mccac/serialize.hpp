#ifndef MCCAC_SERIALIZE_HPP
#define MCCAC_SERIALIZE_HPP

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mccac/code.hpp"
#include "mccac/errors.hpp"

namespace mccac {

constexpr int kCodeFileSchemaVersion = 1;

struct CodeFile {
    int schema_version = kCodeFileSchemaVersion;
    Code code;
    bool restricted = false;
    std::string provenance;
};

inline std::string code_to_json(const Code& code, bool restricted,
                                const std::string& provenance) {
    nlohmann::ordered_json j;
    j["schema_version"] = kCodeFileSchemaVersion;
    j["channels"] = code.params().channels;
    j["length"] = code.params().length;
    j["weight"] = code.params().weight;
    j["restricted"] = restricted;
    j["patterns"] = nlohmann::ordered_json::array();
    for (const auto& pattern : code.patterns()) {
        nlohmann::ordered_json entries = nlohmann::ordered_json::array();
        for (const Slot& e : pattern.entries())
            entries.push_back(nlohmann::ordered_json::array({e.channel, e.time}));
        j["patterns"].push_back(std::move(entries));
    }
    j["provenance"] = provenance;
    return j.dump(2) + "\n";
}

inline CodeFile code_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("code file: ") + e.what());
    }
    try {
        if (!j.is_object()) throw ParseError("code file: top level must be an object");
        if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
            throw ParseError("code file: missing integer field 'schema_version'");
        const int version = j["schema_version"].get<int>();
        if (version != kCodeFileSchemaVersion)
            throw ParseError("code file: unsupported schema_version " + std::to_string(version));
        for (const char* field : {"channels", "length", "weight"}) {
            if (!j.contains(field) || !j[field].is_number_integer())
                throw ParseError(std::string("code file: missing integer field '") + field + "'");
        }
        if (!j.contains("patterns") || !j["patterns"].is_array())
            throw ParseError("code file: missing array field 'patterns'");

        CodeFile file;
        file.schema_version = version;
        CodeParams params{j["channels"].get<int>(), j["length"].get<int>(),
                          j["weight"].get<int>()};
        try {
            params.validate();
        } catch (const std::invalid_argument& e) {
            throw CodeValidationError(std::string("code file: ") + e.what());
        }
        file.restricted = j.value("restricted", false);
        file.provenance = j.value("provenance", std::string{});

        std::vector<SchedulingPattern> patterns;
        int index = 0;
        for (const auto& raw : j["patterns"]) {
            if (!raw.is_array())
                throw ParseError("code file: pattern " + std::to_string(index) +
                                 " must be an array of [channel, time] pairs");
            std::vector<Slot> entries;
            for (const auto& pair : raw) {
                if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                    !pair[1].is_number_integer())
                    throw ParseError("code file: pattern " + std::to_string(index) +
                                     " has a malformed entry");
                entries.push_back({pair[0].get<int>(), pair[1].get<int>()});
            }
            if (static_cast<int>(entries.size()) != params.weight)
                throw CodeValidationError("code file: pattern " + std::to_string(index) +
                                          " has " + std::to_string(entries.size()) +
                                          " entries, expected weight " +
                                          std::to_string(params.weight));
            try {
                patterns.emplace_back(std::move(entries));
            } catch (const std::invalid_argument& e) {
                throw CodeValidationError("code file: pattern " + std::to_string(index) + ": " +
                                          e.what());
            }
            ++index;
        }
        try {
            file.code = Code(params, std::move(patterns));
        } catch (const CodeValidationError& e) {
            throw CodeValidationError(std::string("code file: ") + e.what());
        }
        return file;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("code file: ") + e.what());
    }
}

inline void save_code(const Code& code, const std::string& path, bool restricted = false,
                      const std::string& provenance = {}) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_code: cannot open '" + path + "' for writing");
    out << code_to_json(code, restricted, provenance);
    if (!out) throw std::runtime_error("save_code: write to '" + path + "' failed");
}

inline CodeFile load_code(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("load_code: cannot open '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return code_from_json(text);
}

}  // namespace mccac

#endif  // MCCAC_SERIALIZE_HPP
