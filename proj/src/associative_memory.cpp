#include "horizon/associative_memory.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace horizon {

AssociativeTensor::AssociativeTensor(std::shared_ptr<const TaustarGrid> grid,
                                     std::shared_ptr<const StimulusVocabulary> vocab)
    : grid_(std::move(grid)), vocab_(std::move(vocab)),
      values_(grid_->n_units() * vocab_->size() * vocab_->size(), 0.0) {}

void AssociativeTensor::hebbian_update(std::span<const double> f_now,
                                       const PastTimeline& past, double rate) {
    const std::size_t n_stim = vocab_->size();
    if (f_now.size() != n_stim)
        throw std::invalid_argument("hebbian update: present vector size does not match vocabulary");
    if (!past.grid().same_layout(*grid_) || !(past.vocab() == *vocab_))
        throw std::invalid_argument("hebbian update: past timeline shape mismatch");

    for (std::size_t j = 0; j < grid_->n_units(); ++j) {
        const std::span<const double> past_row = past.node_row(j);
        double* slab = values_.data() + j * n_stim * n_stim;
        for (std::size_t present = 0; present < n_stim; ++present) {
            const double gain = rate * f_now[present];
            if (gain == 0.0)
                continue;
            double* row = slab + present * n_stim;
            for (std::size_t p = 0; p < n_stim; ++p)
                row[p] += gain * past_row[p];
        }
    }
}

void AssociativeTensor::add(const AssociativeTensor& other) {
    if (!other.grid_->same_layout(*grid_) || !(*other.vocab_ == *vocab_))
        throw std::invalid_argument("tensor merge: shape mismatch");
    for (std::size_t i = 0; i < values_.size(); ++i)
        values_[i] += other.values_[i];
    episodes_seen_ += other.episodes_seen_;
}

NormalizedTensor::NormalizedTensor(std::shared_ptr<const TaustarGrid> grid,
                                   std::shared_ptr<const StimulusVocabulary> vocab,
                                   NormalizationAxis axis, double epsilon)
    : grid_(std::move(grid)), vocab_(std::move(vocab)), axis_(axis), epsilon_(epsilon),
      values_(grid_->n_units() * vocab_->size() * vocab_->size(), 0.0) {}

namespace {

double clamped(double v) { return v > 0.0 ? v : 0.0; }

// Visits each denominator group of a (lag, present, past) slab as a strided
// row: sum_past groups stride 1, sum_present groups stride n_stim.
template <typename Fn>
void for_each_row(std::size_t n_units, std::size_t n_stim, NormalizationAxis axis, Fn&& fn) {
    for (std::size_t j = 0; j < n_units; ++j) {
        const std::size_t slab = j * n_stim * n_stim;
        for (std::size_t fixed = 0; fixed < n_stim; ++fixed) {
            if (axis == NormalizationAxis::sum_past)
                fn(slab + fixed * n_stim, std::size_t{1});
            else
                fn(slab + fixed, n_stim);
        }
    }
}

} // namespace

double default_epsilon(const AssociativeTensor& m, NormalizationAxis axis) {
    const std::size_t n_stim = m.vocab().size();
    const auto values = m.values();
    double max_row = 0.0;
    for_each_row(m.grid().n_units(), n_stim, axis, [&](std::size_t base, std::size_t stride) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n_stim; ++i)
            sum += clamped(values[base + i * stride]);
        max_row = std::max(max_row, sum);
    });
    if (max_row == 0.0)
        return std::numeric_limits<double>::min();
    return 1e-12 * max_row;
}

NormalizedTensor normalize(const AssociativeTensor& m, double epsilon, NormalizationAxis axis) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("normalize: epsilon must be positive");
    const std::size_t n_stim = m.vocab().size();
    NormalizedTensor out(m.grid_ptr(), m.vocab_ptr(), axis, epsilon);
    const auto src = m.values();
    auto& dst = out.values_;
    for_each_row(m.grid().n_units(), n_stim, axis, [&](std::size_t base, std::size_t stride) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n_stim; ++i)
            sum += clamped(src[base + i * stride]);
        if (sum > epsilon) {
            for (std::size_t i = 0; i < n_stim; ++i)
                dst[base + i * stride] = clamped(src[base + i * stride]) / sum;
        }
    });
    return out;
}

NormalizedTensor normalize(const AssociativeTensor& m, NormalizationAxis axis) {
    return normalize(m, default_epsilon(m, axis), axis);
}

} // namespace horizon
