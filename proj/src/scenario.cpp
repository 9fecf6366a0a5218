#include "horizon/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <json.hpp>

#include "horizon/io_util.hpp"

namespace horizon {

using nlohmann::json;

std::size_t Scenario::choice_index(std::string_view label) const {
    for (std::size_t i = 0; i < choices.size(); ++i)
        if (choices[i] == label)
            return i;
    throw ScenarioError("scenario: unknown choice '" + std::string(label) + "'");
}

const std::vector<BranchSpec>& Scenario::branches_of(std::string_view label) const {
    return branches[choice_index(label)];
}

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ScenarioError("scenario " + where + ": " + what);
}

void require_keys(const json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    for (const auto& [key, unused] : obj.items())
        if (!allowed.contains(key))
            fail(where, "unknown key '" + key + "'");
}

double finite_number(const json& v, const std::string& where) {
    if (!v.is_number())
        fail(where, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d))
        fail(where, "value must be finite");
    return d;
}

} // namespace

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ScenarioError(std::string("scenario: syntax error: ") + e.what());
    }
    if (!doc.is_object())
        fail("document", "top level must be an object");
    require_keys(doc, "document", {"states", "rewards", "time_scale", "choices"});

    if (!doc.contains("states") || !doc["states"].is_array())
        fail("document", "missing 'states' list");
    std::vector<std::string> states;
    for (const auto& s : doc["states"]) {
        if (!s.is_string())
            fail("states", "entries must be strings");
        states.push_back(s.get<std::string>());
    }

    Scenario scenario;
    scenario.vocab = std::make_shared<const StimulusVocabulary>(states); // rejects duplicates

    scenario.rewards = RewardVector::zeros(*scenario.vocab);
    if (doc.contains("rewards")) {
        if (!doc["rewards"].is_object())
            fail("rewards", "must be a map state -> number");
        for (const auto& [name, value] : doc["rewards"].items()) {
            if (!scenario.vocab->contains(name))
                fail("rewards", "unknown state '" + name + "'");
            scenario.rewards.r[scenario.vocab->index_of(name)] =
                finite_number(value, "rewards." + name);
        }
    }

    if (doc.contains("time_scale")) {
        scenario.time_scale = finite_number(doc["time_scale"], "time_scale");
        if (!(scenario.time_scale > 0.0))
            fail("time_scale", "must be positive");
    }

    if (!doc.contains("choices") || !doc["choices"].is_object())
        fail("document", "missing 'choices' map");
    if (doc["choices"].empty())
        fail("choices", "at least one choice is required");

    for (const auto& [label, branch_list] : doc["choices"].items()) {
        if (!scenario.vocab->contains(label))
            fail("choices", "choice label '" + label + "' is not a declared state");
        if (!branch_list.is_array() || branch_list.empty())
            fail("choices." + label, "must be a non-empty list of branches");

        std::vector<BranchSpec> branches;
        double prob_sum = 0.0;
        for (std::size_t b = 0; b < branch_list.size(); ++b) {
            const std::string where = "choices." + label + "[" + std::to_string(b) + "]";
            const json& branch = branch_list[b];
            if (!branch.is_object())
                fail(where, "branch must be an object");
            require_keys(branch, where, {"p", "outcomes"});
            if (!branch.contains("p"))
                fail(where, "missing branch probability 'p'");
            BranchSpec spec;
            spec.probability = finite_number(branch["p"], where + ".p");
            if (spec.probability < 0.0 || spec.probability > 1.0)
                fail(where + ".p", "probability must lie in [0, 1]");
            prob_sum += spec.probability;

            if (branch.contains("outcomes")) {
                if (!branch["outcomes"].is_array())
                    fail(where + ".outcomes", "must be a list");
                for (std::size_t o = 0; o < branch["outcomes"].size(); ++o) {
                    const std::string owhere = where + ".outcomes[" + std::to_string(o) + "]";
                    const json& oj = branch["outcomes"][o];
                    if (!oj.is_object())
                        fail(owhere, "outcome must be an object");
                    require_keys(oj, owhere, {"state", "delay", "magnitude"});
                    OutcomeSpec outcome;
                    if (!oj.contains("state") || !oj["state"].is_string())
                        fail(owhere, "missing outcome state");
                    outcome.state = oj["state"].get<std::string>();
                    if (!scenario.vocab->contains(outcome.state))
                        fail(owhere, "unknown state '" + outcome.state + "'");
                    if (!oj.contains("delay"))
                        fail(owhere, "missing outcome delay");
                    outcome.delay = finite_number(oj["delay"], owhere + ".delay");
                    if (!(outcome.delay > 0.0))
                        fail(owhere + ".delay", "delay must be positive");
                    if (oj.contains("magnitude"))
                        outcome.magnitude = finite_number(oj["magnitude"], owhere + ".magnitude");
                    spec.outcomes.push_back(std::move(outcome));
                }
            }
            branches.push_back(std::move(spec));
        }
        if (std::abs(prob_sum - 1.0) > 1e-9)
            fail("choices." + label, "branch probabilities sum to " +
                                         format_double(prob_sum) + ", expected 1");
        scenario.choices.push_back(label);
        scenario.branches.push_back(std::move(branches));
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
    json doc;
    doc["states"] = scenario.vocab->names();
    json rewards = json::object();
    for (std::size_t i = 0; i < scenario.vocab->size(); ++i)
        if (scenario.rewards.r[i] != 0.0)
            rewards[scenario.vocab->name(i)] = scenario.rewards.r[i];
    doc["rewards"] = rewards;
    doc["time_scale"] = scenario.time_scale;
    json choices = json::object();
    for (std::size_t c = 0; c < scenario.choices.size(); ++c) {
        json branch_list = json::array();
        for (const auto& branch : scenario.branches[c]) {
            json bj;
            bj["p"] = branch.probability;
            json outcomes = json::array();
            for (const auto& outcome : branch.outcomes) {
                json oj;
                oj["state"] = outcome.state;
                oj["delay"] = outcome.delay;
                oj["magnitude"] = outcome.magnitude;
                outcomes.push_back(std::move(oj));
            }
            bj["outcomes"] = std::move(outcomes);
            branch_list.push_back(std::move(bj));
        }
        choices[scenario.choices[c]] = std::move(branch_list);
    }
    doc["choices"] = std::move(choices);
    return doc.dump(2) + "\n";
}

Episode sample_episode(const Scenario& scenario, std::string_view choice, RandomSource& rng) {
    const std::size_t c = scenario.choice_index(choice);
    const auto& branches = scenario.branches[c];

    std::size_t picked = branches.size() - 1; // guard against u landing past the sum
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t b = 0; b < branches.size(); ++b) {
        cumulative += branches[b].probability;
        if (u < cumulative) {
            picked = b;
            break;
        }
    }

    Episode episode;
    episode.choice = std::string(choice);
    episode.stream.events.push_back({0.0, scenario.vocab->index_of(choice), 1.0});
    for (const auto& outcome : branches[picked].outcomes)
        episode.stream.events.push_back({outcome.delay * scenario.time_scale,
                                         scenario.vocab->index_of(outcome.state),
                                         outcome.magnitude});
    std::stable_sort(episode.stream.events.begin(), episode.stream.events.end(),
                     [](const Event& a, const Event& b) { return a.time < b.time; });
    return episode;
}

std::vector<std::string> interior_warnings(const Scenario& scenario, const TaustarGrid& grid) {
    std::vector<std::string> warnings;
    for (std::size_t c = 0; c < scenario.choices.size(); ++c) {
        for (std::size_t b = 0; b < scenario.branches[c].size(); ++b) {
            for (const auto& outcome : scenario.branches[c][b].outcomes) {
                const double delay = outcome.delay * scenario.time_scale;
                if (delay < grid.interior_lo() || delay > grid.interior_hi())
                    warnings.push_back("delay " + format_double(delay) + " (choice '" +
                                       scenario.choices[c] + "', state '" + outcome.state +
                                       "') lies outside the grid interior [" +
                                       format_double(grid.interior_lo()) + ", " +
                                       format_double(grid.interior_hi()) + "]");
            }
        }
    }
    return warnings;
}

} // namespace horizon
