#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#ifndef PHW_CLI_VERSION
#define PHW_CLI_VERSION "0.0.0"
#endif

namespace phwcli {

/* Reproducibility header embedded in every output artifact: the resolved
 * command line, the seed, and the generator name pin the run down exactly.
 * timing_seconds is always null in the artifact — wall time goes to stderr —
 * so identical seeds yield byte-identical files. */
struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> flags; // resolved values
    std::optional<std::uint64_t> seed;

    void add_flag(const std::string& name, const std::string& value) {
        flags.emplace_back(name, value);
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["record"] = "manifest";
        j["tool"] = "phw";
        j["version"] = PHW_CLI_VERSION;
        j["command"] = command;
        nlohmann::ordered_json fl = nlohmann::ordered_json::object();
        for (const auto& [k, v] : flags)
            fl[k] = v;
        j["flags"] = fl;
        if (seed)
            j["seed"] = *seed;
        else
            j["seed"] = nullptr;
        j["generator"] = "mt19937_64";
        j["timing_seconds"] = nullptr;
        return j;
    }
};

} // namespace phwcli
