#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/future_engine.hpp"
#include "horizon/rng.hpp"
#include "horizon/stimulus_vocabulary.hpp"
#include "horizon/taustar_grid.hpp"

namespace horizon {

/// Scenario document defect, with position or path context in the message.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutcomeSpec {
    std::string state;
    double delay = 0.0;     // from the choice event, before time_scale
    double magnitude = 1.0;

    bool operator==(const OutcomeSpec&) const = default;
};

struct BranchSpec {
    double probability = 0.0;
    std::vector<OutcomeSpec> outcomes;

    bool operator==(const BranchSpec&) const = default;
};

/// Timed stimulus/reward decision tree: each root choice leads to one of
/// several outcome sequences sampled by branch probability.
struct Scenario {
    std::shared_ptr<const StimulusVocabulary> vocab;
    std::vector<std::string> choices;                 // root stimuli
    std::vector<std::vector<BranchSpec>> branches;    // parallel to choices
    RewardVector rewards;
    double time_scale = 1.0;                          // multiplies every delay

    std::size_t choice_index(std::string_view label) const; // throws on unknown
    const std::vector<BranchSpec>& branches_of(std::string_view label) const;

    bool operator==(const Scenario& other) const {
        return *vocab == *other.vocab && choices == other.choices &&
               branches == other.branches && rewards == other.rewards &&
               time_scale == other.time_scale;
    }
};

/// Parses the JSON scenario document. Top-level keys: states (list),
/// rewards (map state -> number), time_scale (number, default 1), choices
/// (map label -> list of {p, outcomes:[{state, delay, magnitude}]}).
/// Unknown keys anywhere are errors; branch probabilities must sum to 1
/// within 1e-9; delays must be positive.
Scenario parse_scenario(std::string_view text);

/// Inverse of parse_scenario: parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

struct Event {
    double time = 0.0;
    std::size_t stimulus = 0;
    double magnitude = 0.0;
};

struct EventStream {
    std::vector<Event> events; // non-decreasing times
};

/// One sampled pass through a choice: the choice stimulus at t = 0 with
/// magnitude 1, followed by the outcomes of one branch at their scaled
/// delays.
struct Episode {
    std::string choice;
    EventStream stream;
};

/// Samples a branch by probability; deterministic given the rng state.
/// Throws on unknown choice.
Episode sample_episode(const Scenario& scenario, std::string_view choice, RandomSource& rng);

/// Scaled delays that land outside the grid's interior band
/// [tau_min (1+c)^k, tau_max (1+c)^-k]; one message per offending outcome.
std::vector<std::string> interior_warnings(const Scenario& scenario, const TaustarGrid& grid);

} // namespace horizon
