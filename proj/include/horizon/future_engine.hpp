#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "horizon/associative_memory.hpp"

namespace horizon {

/// Per-stimulus function over future lags tau* > 0: value(j, i) is the
/// predicted magnitude of stimulus i at lag tau*_j after the probed input.
class FuturePrediction {
public:
    FuturePrediction(std::shared_ptr<const TaustarGrid> grid,
                     std::shared_ptr<const StimulusVocabulary> vocab);

    const TaustarGrid& grid() const { return *grid_; }
    const StimulusVocabulary& vocab() const { return *vocab_; }

    double value(std::size_t node, std::size_t stimulus) const {
        return values_[node * vocab_->size() + stimulus];
    }
    std::span<const double> node_row(std::size_t node) const {
        return {values_.data() + node * vocab_->size(), vocab_->size()};
    }
    std::span<const double> values() const { return values_; }
    std::span<double> mutable_values() { return values_; }

private:
    std::shared_ptr<const TaustarGrid> grid_;
    std::shared_ptr<const StimulusVocabulary> vocab_;
    std::vector<double> values_; // [node][stimulus]
};

/// Signed value of each state.
struct RewardVector {
    std::vector<double> r;

    static RewardVector zeros(const StimulusVocabulary& vocab);
    /// Unlisted states get 0; unknown names are errors.
    static RewardVector from_map(const StimulusVocabulary& vocab,
                                 const std::map<std::string, double>& values);

    bool operator==(const RewardVector&) const = default;
};

/// Weighting over future lags restricting which predicted outcomes count.
class TemporalWindow {
public:
    enum class Kind { rectangular, tabulated };

    /// Inclusive lag band [lo, hi]; requires 0 <= lo < hi.
    static TemporalWindow rectangular(double lo, double hi);
    /// One weight in [0, 1] per exposed node.
    static TemporalWindow tabulated(std::vector<double> weights);

    Kind kind() const { return kind_; }
    double lo() const { return lo_; }
    double hi() const { return hi_; }

    /// Weight applied to node j; validates tabulated length lazily.
    double weight(const TaustarGrid& grid, std::size_t j) const;

private:
    TemporalWindow() = default;
    Kind kind_ = Kind::rectangular;
    double lo_ = 0.0;
    double hi_ = 0.0;
    std::vector<double> weights_;
};

/// Contraction of a normalized tensor with the present input:
/// p[j, present] = sum_i Mbar[j, present, i] * f_now[i].
FuturePrediction predict(const NormalizedTensor& m_bar, std::span<const double> f_now);

/// One-hot probe: p[j, present] = Mbar[j, present, probe].
FuturePrediction predict_state(const NormalizedTensor& m_bar, std::string_view probe);

/// Same contractions on the raw accumulator, scaled (typically by
/// 1/episodes so entries read as per-exposure expected magnitudes).
FuturePrediction predict(const AssociativeTensor& m, std::span<const double> f_now, double scale);
FuturePrediction predict_state(const AssociativeTensor& m, std::string_view probe, double scale);

/// Plain node sum V = sum_j sum_i r_i p[j, i]. The 1/tau* number density of
/// the log grid is realized by node placement, so this sum equals the
/// density-weighted integral and discounts delayed reward as a power law
/// with exponent -1.
double cached_value(const FuturePrediction& p, const RewardVector& rewards);

/// Node sum restricted by a temporal window: V = sum_j sum_i r_i p[j,i] w_j.
double windowed_value(const FuturePrediction& p, const RewardVector& rewards,
                      const TemporalWindow& window);

struct ScanResult {
    std::size_t node;    // first node meeting the threshold; also the scan cost
    double tau_star;
};

/// Sequential scan of the future timeline: smallest node j with
/// p[j, target] >= threshold. The returned index is the number of nodes
/// visited, which grows with the log of the target's lag. Threshold must be
/// positive and is never defaulted. Throws on unknown target.
std::optional<ScanResult> scan_future(const FuturePrediction& p, std::string_view target,
                                      double threshold);

/// Node index maximizing the mass density per unit log-lag, tau*_j * p[j].
/// On the log-spaced node axis this is the visual peak of the bump and sits
/// at the event lag (the raw profile peaks k/(k+1) of a decade-fraction
/// earlier). Throws on unknown stimulus.
std::size_t peak_node(const FuturePrediction& p, std::string_view stimulus);

/// Mass of a stimulus row over a node range [lo, hi], with the node measure
/// dtau = tau*_j log(1+c): approximates the integral of p dtau*, so a bump's
/// mass estimates its event probability times magnitude.
double row_mass(const FuturePrediction& p, std::string_view stimulus,
                std::size_t lo, std::size_t hi);
double row_mass(const FuturePrediction& p, std::string_view stimulus);

struct BumpSegment {
    std::size_t lo = 0;   // inclusive node range
    std::size_t hi = 0;
    std::size_t peak = 0; // log-density peak node within the range
    double mass = 0.0;
};

/// Splits a stimulus row into bumps at the minimum between adjacent peaks of
/// the log-density profile. Peaks below rel_floor of the global maximum are
/// ignored. Returns nullopt when two retained peaks are not separated by a
/// valley below separation_ratio times the smaller peak (overlapping bumps
/// are unmeasurable, not guessed).
std::optional<std::vector<BumpSegment>> segment_bumps(const FuturePrediction& p,
                                                      std::string_view stimulus,
                                                      double rel_floor = 0.05,
                                                      double separation_ratio = 0.5);

} // namespace horizon
