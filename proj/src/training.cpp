#include "horizon/training.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

namespace horizon {

bool TrainResult::uniform_exposure() const {
    for (const auto& [label, count] : episodes_per_choice)
        if (count != episodes_per_choice.front().second)
            return false;
    return true;
}

void replay_episode(const Episode& episode, LaplaceState& state, AssociativeTensor& tensor,
                    double learning_rate) {
    state.reset();
    std::vector<double> f_now(state.vocab().size(), 0.0);
    double clock = 0.0;
    for (const Event& event : episode.stream.events) {
        state.decay(event.time - clock);
        clock = event.time;
        const PastTimeline past = state.invert();
        state.inject(event.stimulus, event.magnitude);
        f_now[event.stimulus] = event.magnitude;
        tensor.hebbian_update(f_now, past, learning_rate);
        f_now[event.stimulus] = 0.0;
    }
    tensor.add_episodes(1);
}

namespace {

struct Job {
    std::size_t choice = 0;
    std::uint64_t episode = 0;
};

AssociativeTensor run_block(const Scenario& scenario, std::span<const Job> jobs,
                            std::shared_ptr<const TaustarGrid> grid,
                            const TrainOptions& options) {
    AssociativeTensor partial(grid, scenario.vocab);
    LaplaceState state(std::move(grid), scenario.vocab);
    for (const Job& job : jobs) {
        RandomSource rng(derive_seed(options.seed, job.choice, job.episode));
        const Episode episode = sample_episode(scenario, scenario.choices[job.choice], rng);
        replay_episode(episode, state, partial, options.learning_rate);
    }
    return partial;
}

} // namespace

TrainResult train(const Scenario& scenario, std::span<const std::uint64_t> episodes_per_choice,
                  std::shared_ptr<const TaustarGrid> grid, const TrainOptions& options) {
    if (episodes_per_choice.size() != scenario.choices.size())
        throw std::invalid_argument("train: one episode count per choice required");
    for (std::uint64_t count : episodes_per_choice)
        if (count < 1)
            throw std::invalid_argument("train: episodes per choice must be >= 1");

    std::vector<Job> jobs;
    for (std::size_t c = 0; c < scenario.choices.size(); ++c)
        for (std::uint64_t e = 0; e < episodes_per_choice[c]; ++e)
            jobs.push_back({c, e});

    TrainResult result{AssociativeTensor(grid, scenario.vocab), {}};
    for (std::size_t c = 0; c < scenario.choices.size(); ++c)
        result.episodes_per_choice.emplace_back(scenario.choices[c], episodes_per_choice[c]);

    // Episodes are grouped into fixed blocks; blocks may be computed on any
    // worker but partial tensors merge in block order and episodes accumulate
    // in order within a block. The floating-point summation tree is therefore
    // identical for every worker count.
    const unsigned workers = std::max(1u, options.workers);
    constexpr std::size_t block_size = 128;
    const std::size_t n_blocks = (jobs.size() + block_size - 1) / block_size;

    std::vector<std::unique_ptr<AssociativeTensor>> blocks(n_blocks);
    std::atomic<std::size_t> next_block{0};
    auto worker_loop = [&] {
        while (true) {
            const std::size_t b = next_block.fetch_add(1);
            if (b >= n_blocks)
                return;
            const std::size_t lo = b * block_size;
            const std::size_t hi = std::min(jobs.size(), lo + block_size);
            blocks[b] = std::make_unique<AssociativeTensor>(
                run_block(scenario, std::span(jobs).subspan(lo, hi - lo), grid, options));
        }
    };
    if (workers == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker_loop);
        for (auto& t : pool)
            t.join();
    }
    for (auto& block : blocks)
        result.tensor.add(*block);
    return result;
}

TrainResult train(const Scenario& scenario, std::uint64_t episodes_per_choice,
                  std::shared_ptr<const TaustarGrid> grid, const TrainOptions& options) {
    std::vector<std::uint64_t> counts(scenario.choices.size(), episodes_per_choice);
    return train(scenario, counts, std::move(grid), options);
}

} // namespace horizon
