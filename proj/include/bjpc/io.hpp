#ifndef BJPC_IO_HPP
#define BJPC_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "bjpc/model.hpp"

namespace bjpc {

// Dataset object: {"m": int, "k": int, "R": [int...], "w": [float...], "z": [0/1...]}
inline nlohmann::json dataset_to_json(const BjpcSample& s) {
    return nlohmann::json{{"m", s.scheme.m},
                          {"k", s.scheme.k},
                          {"R", s.scheme.removals},
                          {"w", s.w},
                          {"z", s.z}};
}

inline BjpcSample dataset_from_json(const nlohmann::json& j) {
    const CensoringScheme scheme = validate_scheme(
        j.at("m").get<int>(), j.at("k").get<int>(), j.at("R").get<std::vector<int>>());
    return make_sample(scheme, j.at("w").get<std::vector<double>>(),
                       j.at("z").get<std::vector<int>>());
}

inline BjpcSample read_dataset_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    nlohmann::json j;
    in >> j;
    return dataset_from_json(j);
}

inline void write_dataset_json(const std::string& path, const BjpcSample& s) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << dataset_to_json(s).dump(2) << "\n";
}

// Two-column CSV (w,z), scheme supplied separately. A leading "w,z" header
// line is allowed.
inline BjpcSample read_dataset_csv(const std::string& path, const CensoringScheme& scheme) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);
    std::vector<double> w;
    std::vector<int> z;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line.rfind("w,", 0) == 0 || line.rfind("w;", 0) == 0) continue;
        std::istringstream row(line);
        std::string field;
        if (!std::getline(row, field, ',')) continue;
        w.push_back(std::stod(field));
        if (!std::getline(row, field, ','))
            throw std::runtime_error("dataset CSV: missing indicator column in: " + line);
        z.push_back(std::stoi(field));
    }
    return make_sample(scheme, std::move(w), std::move(z));
}

// Parses a removal pattern like "7,0x13" or "14,0,0" into explicit counts
// ("NxJ" repeats N a total of J times).
inline std::vector<int> parse_removal_pattern(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        const auto xpos = tok.find('x');
        if (xpos == std::string::npos) {
            out.push_back(std::stoi(tok));
        } else {
            const int value = std::stoi(tok.substr(0, xpos));
            const int times = std::stoi(tok.substr(xpos + 1));
            if (times < 0) throw std::invalid_argument("removal pattern: negative repeat");
            out.insert(out.end(), times, value);
        }
    }
    return out;
}

}  // namespace bjpc

#endif  // BJPC_IO_HPP
