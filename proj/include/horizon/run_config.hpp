#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "horizon/associative_memory.hpp"
#include "horizon/taustar_grid.hpp"

namespace horizon {

struct GridParams {
    double tau_min = 0.5;
    double tau_max = 100.0;
    std::size_t n_units = 64;
    int k = 4;

    std::shared_ptr<const TaustarGrid> build() const {
        return std::make_shared<const TaustarGrid>(tau_min, tau_max, n_units, k);
    }
    bool operator==(const GridParams&) const = default;
};

/// Everything a command run depends on; echoed into every output file so a
/// run can be reproduced byte-for-byte from its own artifacts.
struct RunConfig {
    GridParams grid;
    std::string scenario_path;
    std::uint64_t seed = 1729;
    std::uint64_t episodes_per_choice = 1;
    std::string output;
    bool strict = false;
    NormalizationAxis axis = NormalizationAxis::sum_past;
    double epsilon = 0.0; // 0 selects the scale-free default floor
    unsigned workers = 1;

    std::string config_line() const;
};

} // namespace horizon
