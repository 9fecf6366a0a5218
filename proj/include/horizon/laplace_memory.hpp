#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "horizon/stimulus_vocabulary.hpp"
#include "horizon/taustar_grid.hpp"

namespace horizon {

/// Compressed estimate of the input history: value(j, i) estimates how much
/// of stimulus i arrived tau*_j in the past. Output of the approximate
/// inverse transform; finite-order ringing may leave small negative values.
class PastTimeline {
public:
    PastTimeline(std::shared_ptr<const TaustarGrid> grid,
                 std::shared_ptr<const StimulusVocabulary> vocab);

    const TaustarGrid& grid() const { return *grid_; }
    const StimulusVocabulary& vocab() const { return *vocab_; }

    double value(std::size_t node, std::size_t stimulus) const {
        return values_[node * vocab_->size() + stimulus];
    }
    /// Contiguous values over stimuli at one node.
    std::span<const double> node_row(std::size_t node) const {
        return {values_.data() + node * vocab_->size(), vocab_->size()};
    }
    std::span<const double> values() const { return values_; }

private:
    friend class LaplaceState;
    std::shared_ptr<const TaustarGrid> grid_;
    std::shared_ptr<const StimulusVocabulary> vocab_;
    std::vector<double> values_; // [exposed node][stimulus]
};

/// Bank of leaky integrators holding the running Laplace transform of the
/// event history, one unit per (rate constant, stimulus) pair including the
/// padding rate nodes.
///
/// Updates integrate dF/dt = -s F + f in closed form (no Euler error):
/// events are Dirac deltas of a given area, extended stimuli enter through
/// step_constant. Single writer; invert() is a pure read.
class LaplaceState {
public:
    LaplaceState(std::shared_ptr<const TaustarGrid> grid,
                 std::shared_ptr<const StimulusVocabulary> vocab);

    const TaustarGrid& grid() const { return *grid_; }
    const StimulusVocabulary& vocab() const { return *vocab_; }
    std::shared_ptr<const TaustarGrid> grid_ptr() const { return grid_; }
    std::shared_ptr<const StimulusVocabulary> vocab_ptr() const { return vocab_; }

    double now() const { return now_; }

    /// Pure decay for dt: F <- F * exp(-s dt). Throws on negative dt.
    void decay(double dt);

    /// Delta input of the given area: F[s, stimulus] += magnitude at every
    /// rate node; simulation time unchanged. Throws on unknown stimulus.
    void inject(std::string_view stimulus, double magnitude);
    void inject(std::size_t stimulus, double magnitude);

    /// Input held constant over dt:
    /// F <- F e^{-s dt} + input (1 - e^{-s dt}) / s. Throws on negative dt
    /// or input size != vocabulary size.
    void step_constant(std::span<const double> input, double dt);

    void reset();

    /// Activation of one integrator; node indexes the extended s-axis.
    double activation(std::size_t extended_node, std::size_t stimulus) const {
        return values_[extended_node * vocab_->size() + stimulus];
    }
    /// Activation at an exposed node (skips the low-side padding).
    double activation_exposed(std::size_t node, std::size_t stimulus) const {
        return activation(node + static_cast<std::size_t>(grid_->k()), stimulus);
    }

    /// Approximate inverse transform (Post, order k): for each exposed node,
    /// f~ = C_k s^{k+1} D^k F(s) with D^k estimated by k passes of centered
    /// two-point divided differences on the geometric s-axis. Each pass
    /// consumes one node per side; the padding nodes make the result defined
    /// exactly on the exposed nodes.
    PastTimeline invert() const;

private:
    std::shared_ptr<const TaustarGrid> grid_;
    std::shared_ptr<const StimulusVocabulary> vocab_;
    std::vector<double> values_; // [extended s-node][stimulus]
    double now_ = 0.0;
};

/// Closed-form response of the exact order-k inverse to a unit delta:
/// (k^{k+1}/k!) (1/tau*) (t/tau*)^k e^{-k t/tau*}. Peaks over t at t = tau*;
/// its integral over t is 1 for every tau*. Testing oracle for invert().
/// Throws on non-positive tau_star; t < 0 returns 0 (causal response).
double impulse_response_analytic(const TaustarGrid& grid, double tau_star, double t);

} // namespace horizon
