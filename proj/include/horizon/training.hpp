#pragma once

#include <cstdint>
#include <memory>
#include <span>

#include "horizon/associative_memory.hpp"
#include "horizon/scenario.hpp"
#include "horizon/tensor_snapshot.hpp"

namespace horizon {

struct TrainOptions {
    std::uint64_t seed = 0;
    double learning_rate = 1.0;
    unsigned workers = 1; // result is bit-identical for any worker count
};

struct TrainResult {
    AssociativeTensor tensor;
    ChoiceCounts episodes_per_choice;

    bool uniform_exposure() const;
};

/// Replays one episode into the tensor: for each event, decay to its time,
/// read the past timeline, inject, then apply the Hebbian update with the
/// just-injected present vector and the pre-injection past. The pre-injection
/// read keeps a stimulus from associating with itself at lag zero. The state
/// is reset first (episodes are isolated presentations).
void replay_episode(const Episode& episode, LaplaceState& state, AssociativeTensor& tensor,
                    double learning_rate = 1.0);

/// Samples and accumulates episodes_per_choice[c] episodes for each choice.
/// Episode e of choice c draws from an rng seeded by (seed, c, e), and
/// partial tensors merge in fixed episode order, so results are
/// bit-identical across runs and worker counts.
TrainResult train(const Scenario& scenario, std::span<const std::uint64_t> episodes_per_choice,
                  std::shared_ptr<const TaustarGrid> grid, const TrainOptions& options);

/// Equal exposure for every choice.
TrainResult train(const Scenario& scenario, std::uint64_t episodes_per_choice,
                  std::shared_ptr<const TaustarGrid> grid, const TrainOptions& options);

} // namespace horizon
