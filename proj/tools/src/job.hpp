#pragma once

// Job descriptions read from JSON config files.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cartan/polynomial.hpp"
#include "cartan/vortex3d.hpp"

namespace cartan::cli {

struct Sampling {
    int count = 200;
    std::uint64_t seed = 0;
    double excision = 1e-2;
};

struct Grid {
    int n = 101;
    double xmin = -3.0;
    double xmax = 3.0;
    double ymin = -3.0;
    double ymax = 3.0;
};

struct Job {
    std::string name;
    double lambda0 = 1.0;
    double lambda = 1.0;
    std::string mapDescription;
    poly::RationalMap map = poly::RationalMap::power(1);
    std::optional<vortex3d::LiftMode> lift;
    Sampling sampling;
    Grid grid;
    double perturbation = 0.0;
};

/// Overrides from the command line; unset fields keep the config values.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<int> points;
};

/// A config is either a single job object or {"jobs": [...]}. Throws Error(Config).
std::vector<Job> parseJobs(const nlohmann::json& config, const Overrides& overrides);
std::vector<Job> loadJobs(const std::string& path, const Overrides& overrides);

}  // namespace cartan::cli
