#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qsim/qstate.hpp"
#include "qsim/random.hpp"

namespace qsim::cli {

using Json = nlohmann::ordered_json;

struct RunReport {
    std::string algorithm;
    Json parameters = Json::object();
    Json answer;
    std::vector<std::pair<std::string, double>> distribution;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    double wall_time_ms = 0.0;
    bool success = true;
};

// Values are rounded to 12 decimals so that exact point masses print as 1.0.
inline double clean(double v) {
    const double r = std::round(v * 1e12) / 1e12;
    return r == 0.0 ? 0.0 : r;
}

// Exact probabilities, or shot counts sampled from them when shots are requested.
inline std::vector<std::pair<std::string, double>> report_entries(const Distribution& exact,
                                                                  std::optional<std::uint64_t> shots,
                                                                  std::uint64_t seed, std::size_t top) {
    std::vector<std::pair<std::string, double>> rows;
    if (shots) {
        std::vector<std::string> keys;
        std::vector<double> weights;
        for (const auto& [k, v] : exact.entries) {
            keys.push_back(k);
            weights.push_back(v);
        }
        if (!keys.empty()) {
            Rng rng(derive_seed(seed, 0x5107));
            CdfSampler sampler(weights);
            std::vector<std::uint64_t> counts(keys.size(), 0);
            for (std::uint64_t i = 0; i < *shots; ++i) ++counts[sampler(rng)];
            for (std::size_t i = 0; i < keys.size(); ++i)
                if (counts[i] > 0) rows.emplace_back(keys[i], static_cast<double>(counts[i]));
        }
    } else {
        for (const auto& [k, v] : exact.entries)
            if (clean(v) > 0.0) rows.emplace_back(k, clean(v));
    }
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    if (rows.size() > top) rows.resize(top);
    return rows;
}

inline Json to_json(const RunReport& r) {
    Json dist = Json::array();
    for (const auto& [bits, value] : r.distribution) dist.push_back({{"bitstring", bits}, {"value", value}});
    Json out;
    out["algorithm"] = r.algorithm;
    out["parameters"] = r.parameters;
    out["answer"] = r.answer;
    out["distribution"] = dist;
    out["seed"] = r.seed;
    out["shots"] = r.shots ? Json(*r.shots) : Json(nullptr);
    out["wall_time_ms"] = r.wall_time_ms;
    return out;
}

inline void print_human(std::ostream& os, const RunReport& r) {
    os << r.algorithm << (r.success ? "" : " (failed)") << "\n";
    for (const auto& [k, v] : r.parameters.items()) os << "  " << k << " = " << v.dump() << "\n";
    os << "answer: " << r.answer.dump() << "\n";
    os << "seed: " << r.seed << (r.shots ? ", shots: " + std::to_string(*r.shots) : std::string()) << "\n";
    if (r.distribution.empty()) return;
    const double peak = r.distribution.front().second;
    constexpr int width = 40;
    os << (r.shots ? "counts" : "probabilities") << ":\n";
    for (const auto& [bits, value] : r.distribution) {
        const int len = peak > 0 ? static_cast<int>(std::lround(width * value / peak)) : 0;
        os << "  " << bits << " |" << std::string(static_cast<std::size_t>(len), '#')
           << std::string(static_cast<std::size_t>(width - len), ' ') << "| " << value << "\n";
    }
}

}  // namespace qsim::cli
