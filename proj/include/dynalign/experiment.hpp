#ifndef DYNALIGN_EXPERIMENT_HPP
#define DYNALIGN_EXPERIMENT_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dynalign/core.hpp"

namespace dynalign {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a 64-bit digest; enough to pin input identity in experiment records.
inline std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return fnv1a64(bytes);
}

// Provenance of one CLI run: everything needed to repeat it bit-identically
// (the wall time and thread count are informational; results do not depend on
// them).
struct ExperimentRecord {
    std::string subcommand;
    nlohmann::json config = nlohmann::json::object();
    std::vector<std::pair<std::string, std::uint64_t>> inputs;  // path, digest
    std::uint64_t seed = 0;
    unsigned threads = 1;
    double wall_seconds = 0;
    std::vector<std::string> outputs;

    void add_input(const std::string& path) { inputs.emplace_back(path, fnv1a64_file(path)); }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["tool_version"] = kToolVersion;
        j["subcommand"] = subcommand;
        j["config"] = config;
        j["inputs"] = nlohmann::json::array();
        for (const auto& [path, digest] : inputs) {
            char buf[20];
            std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
            j["inputs"].push_back({{"path", path}, {"fnv1a64", buf}});
        }
        j["seed"] = seed;
        j["threads"] = threads;
        j["wall_seconds"] = wall_seconds;
        j["outputs"] = outputs;
        return j;
    }

    void write(const std::string& path) const {
        std::ofstream out(path);
        if (!out) throw DataError("cannot write '" + path + "'");
        out << to_json().dump(2) << '\n';
    }
};

}  // namespace dynalign

#endif  // DYNALIGN_EXPERIMENT_HPP
