#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "horizon/laplace_memory.hpp"
#include "horizon/stimulus_vocabulary.hpp"
#include "horizon/taustar_grid.hpp"

namespace horizon {

/// Hebbian three-tensor over (lag node, present stimulus, past stimulus):
/// a pure accumulator of outer products between the present input and the
/// compressed past. Layout is (lag, present, past) row-major.
class AssociativeTensor {
public:
    AssociativeTensor(std::shared_ptr<const TaustarGrid> grid,
                      std::shared_ptr<const StimulusVocabulary> vocab);

    const TaustarGrid& grid() const { return *grid_; }
    const StimulusVocabulary& vocab() const { return *vocab_; }
    std::shared_ptr<const TaustarGrid> grid_ptr() const { return grid_; }
    std::shared_ptr<const StimulusVocabulary> vocab_ptr() const { return vocab_; }

    /// M[j, present, past] += rate * f_now[present] * past(j, past).
    /// Invoked at event times only; with delta inputs this integrates the
    /// continuous Hebbian rule exactly (the integrand vanishes between
    /// events). Throws on shape mismatch.
    void hebbian_update(std::span<const double> f_now, const PastTimeline& past, double rate);

    double value(std::size_t node, std::size_t present, std::size_t past) const {
        return values_[(node * vocab_->size() + present) * vocab_->size() + past];
    }
    /// Contiguous values over the past index for fixed (node, present).
    std::span<const double> past_row(std::size_t node, std::size_t present) const {
        return {values_.data() + (node * vocab_->size() + present) * vocab_->size(),
                vocab_->size()};
    }
    std::span<const double> values() const { return values_; }
    std::span<double> mutable_values() { return values_; }

    /// Elementwise merge of a shape-compatible tensor; episode counts add.
    void add(const AssociativeTensor& other);

    std::uint64_t episodes_seen() const { return episodes_seen_; }
    void add_episodes(std::uint64_t n) { episodes_seen_ += n; }

private:
    std::shared_ptr<const TaustarGrid> grid_;
    std::shared_ptr<const StimulusVocabulary> vocab_;
    std::vector<double> values_;
    std::uint64_t episodes_seen_ = 0;
};

/// Denominator axis for divisive normalization.
enum class NormalizationAxis {
    /// Each (lag, present) row is divided by its sum over past stimuli.
    sum_past,
    /// Each (lag, past) column is divided by its sum over present stimuli;
    /// reads as "probability of the successor given the cue at this lag".
    sum_present,
};

/// Row-normalized tensor: rows above the epsilon floor sum to 1, rows at or
/// below it are identically zero. Negative accumulator entries are clamped
/// to zero before normalization to preserve the probability reading.
class NormalizedTensor {
public:
    const TaustarGrid& grid() const { return *grid_; }
    const StimulusVocabulary& vocab() const { return *vocab_; }
    std::shared_ptr<const TaustarGrid> grid_ptr() const { return grid_; }
    std::shared_ptr<const StimulusVocabulary> vocab_ptr() const { return vocab_; }
    NormalizationAxis axis() const { return axis_; }
    double epsilon() const { return epsilon_; }

    double value(std::size_t node, std::size_t present, std::size_t past) const {
        return values_[(node * vocab_->size() + present) * vocab_->size() + past];
    }
    std::span<const double> past_row(std::size_t node, std::size_t present) const {
        return {values_.data() + (node * vocab_->size() + present) * vocab_->size(),
                vocab_->size()};
    }
    std::span<const double> values() const { return values_; }

private:
    friend NormalizedTensor normalize(const AssociativeTensor&, double, NormalizationAxis);
    NormalizedTensor(std::shared_ptr<const TaustarGrid> grid,
                     std::shared_ptr<const StimulusVocabulary> vocab,
                     NormalizationAxis axis, double epsilon);

    std::shared_ptr<const TaustarGrid> grid_;
    std::shared_ptr<const StimulusVocabulary> vocab_;
    NormalizationAxis axis_;
    double epsilon_;
    std::vector<double> values_;
};

/// Scale-free denominator floor: 1e-12 times the largest row sum on the
/// given axis (after clamping), so normalization commutes with a global
/// rescaling of the tensor. Returns a tiny positive floor for zero tensors.
double default_epsilon(const AssociativeTensor& m,
                       NormalizationAxis axis = NormalizationAxis::sum_past);

/// Divisive normalization with an explicit denominator floor.
/// Throws on non-positive epsilon.
NormalizedTensor normalize(const AssociativeTensor& m, double epsilon,
                           NormalizationAxis axis = NormalizationAxis::sum_past);

/// Normalization with the scale-free default floor.
NormalizedTensor normalize(const AssociativeTensor& m,
                           NormalizationAxis axis = NormalizationAxis::sum_past);

} // namespace horizon
