#include "horizon/future_engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace horizon {

FuturePrediction::FuturePrediction(std::shared_ptr<const TaustarGrid> grid,
                                   std::shared_ptr<const StimulusVocabulary> vocab)
    : grid_(std::move(grid)), vocab_(std::move(vocab)),
      values_(grid_->n_units() * vocab_->size(), 0.0) {}

RewardVector RewardVector::zeros(const StimulusVocabulary& vocab) {
    return RewardVector{std::vector<double>(vocab.size(), 0.0)};
}

RewardVector RewardVector::from_map(const StimulusVocabulary& vocab,
                                    const std::map<std::string, double>& values) {
    RewardVector out = zeros(vocab);
    for (const auto& [name, value] : values) {
        if (!std::isfinite(value))
            throw std::invalid_argument("reward vector: non-finite value for '" + name + "'");
        out.r[vocab.index_of(name)] = value;
    }
    return out;
}

TemporalWindow TemporalWindow::rectangular(double lo, double hi) {
    if (!(lo >= 0.0) || !(hi > lo))
        throw std::invalid_argument("temporal window: requires 0 <= lo < hi");
    TemporalWindow w;
    w.kind_ = Kind::rectangular;
    w.lo_ = lo;
    w.hi_ = hi;
    return w;
}

TemporalWindow TemporalWindow::tabulated(std::vector<double> weights) {
    for (double v : weights)
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("temporal window: tabulated weights must lie in [0, 1]");
    TemporalWindow w;
    w.kind_ = Kind::tabulated;
    w.weights_ = std::move(weights);
    return w;
}

double TemporalWindow::weight(const TaustarGrid& grid, std::size_t j) const {
    if (kind_ == Kind::rectangular) {
        const double tau = grid.tau(j);
        return (tau >= lo_ && tau <= hi_) ? 1.0 : 0.0;
    }
    if (weights_.size() != grid.n_units())
        throw std::invalid_argument("temporal window: tabulated weights do not match grid size");
    return weights_[j];
}

namespace {

template <typename Tensor>
FuturePrediction contract(const Tensor& m, std::span<const double> f_now, double scale) {
    const std::size_t n_stim = m.vocab().size();
    if (f_now.size() != n_stim)
        throw std::invalid_argument("predict: input vector size does not match vocabulary");
    FuturePrediction p(m.grid_ptr(), m.vocab_ptr());
    auto out = p.mutable_values();
    for (std::size_t j = 0; j < m.grid().n_units(); ++j) {
        for (std::size_t present = 0; present < n_stim; ++present) {
            const auto row = m.past_row(j, present);
            double acc = 0.0;
            for (std::size_t i = 0; i < n_stim; ++i)
                acc += row[i] * f_now[i];
            out[j * n_stim + present] = scale * acc;
        }
    }
    return p;
}

template <typename Tensor>
FuturePrediction slice(const Tensor& m, std::string_view probe, double scale) {
    const std::size_t past = m.vocab().index_of(probe);
    const std::size_t n_stim = m.vocab().size();
    FuturePrediction p(m.grid_ptr(), m.vocab_ptr());
    auto out = p.mutable_values();
    for (std::size_t j = 0; j < m.grid().n_units(); ++j)
        for (std::size_t present = 0; present < n_stim; ++present)
            out[j * n_stim + present] = scale * m.value(j, present, past);
    return p;
}

} // namespace

FuturePrediction predict(const NormalizedTensor& m_bar, std::span<const double> f_now) {
    return contract(m_bar, f_now, 1.0);
}

FuturePrediction predict_state(const NormalizedTensor& m_bar, std::string_view probe) {
    return slice(m_bar, probe, 1.0);
}

FuturePrediction predict(const AssociativeTensor& m, std::span<const double> f_now, double scale) {
    return contract(m, f_now, scale);
}

FuturePrediction predict_state(const AssociativeTensor& m, std::string_view probe, double scale) {
    return slice(m, probe, scale);
}

double cached_value(const FuturePrediction& p, const RewardVector& rewards) {
    const std::size_t n_stim = p.vocab().size();
    if (rewards.r.size() != n_stim)
        throw std::invalid_argument("cached value: reward vector size does not match vocabulary");
    double v = 0.0;
    for (std::size_t j = 0; j < p.grid().n_units(); ++j) {
        const auto row = p.node_row(j);
        for (std::size_t i = 0; i < n_stim; ++i)
            v += rewards.r[i] * row[i];
    }
    return v;
}

double windowed_value(const FuturePrediction& p, const RewardVector& rewards,
                      const TemporalWindow& window) {
    const std::size_t n_stim = p.vocab().size();
    if (rewards.r.size() != n_stim)
        throw std::invalid_argument("windowed value: reward vector size does not match vocabulary");
    double v = 0.0;
    for (std::size_t j = 0; j < p.grid().n_units(); ++j) {
        const double w = window.weight(p.grid(), j);
        if (w == 0.0)
            continue;
        const auto row = p.node_row(j);
        double node = 0.0;
        for (std::size_t i = 0; i < n_stim; ++i)
            node += rewards.r[i] * row[i];
        v += w * node;
    }
    return v;
}

std::optional<ScanResult> scan_future(const FuturePrediction& p, std::string_view target,
                                      double threshold) {
    if (!(threshold > 0.0))
        throw std::invalid_argument("scan: threshold must be positive");
    const std::size_t stim = p.vocab().index_of(target);
    for (std::size_t j = 0; j < p.grid().n_units(); ++j)
        if (p.value(j, stim) >= threshold)
            return ScanResult{j, p.grid().tau(j)};
    return std::nullopt;
}

std::size_t peak_node(const FuturePrediction& p, std::string_view stimulus) {
    const std::size_t stim = p.vocab().index_of(stimulus);
    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < p.grid().n_units(); ++j) {
        const double density = p.grid().tau(j) * p.value(j, stim);
        if (density > best_value) {
            best_value = density;
            best = j;
        }
    }
    return best;
}

double row_mass(const FuturePrediction& p, std::string_view stimulus,
                std::size_t lo, std::size_t hi) {
    const std::size_t stim = p.vocab().index_of(stimulus);
    if (lo > hi || hi >= p.grid().n_units())
        throw std::invalid_argument("row mass: node range out of bounds");
    const double log_step = p.grid().log_spacing();
    double mass = 0.0;
    for (std::size_t j = lo; j <= hi; ++j)
        mass += p.value(j, stim) * p.grid().tau(j) * log_step;
    return mass;
}

double row_mass(const FuturePrediction& p, std::string_view stimulus) {
    return row_mass(p, stimulus, 0, p.grid().n_units() - 1);
}

std::optional<std::vector<BumpSegment>> segment_bumps(const FuturePrediction& p,
                                                      std::string_view stimulus,
                                                      double rel_floor,
                                                      double separation_ratio) {
    const std::size_t stim = p.vocab().index_of(stimulus);
    const std::size_t n = p.grid().n_units();
    std::vector<double> density(n);
    for (std::size_t j = 0; j < n; ++j)
        density[j] = p.grid().tau(j) * p.value(j, stim);
    const double global_max = *std::max_element(density.begin(), density.end());
    if (!(global_max > 0.0))
        return std::vector<BumpSegment>{};

    // Local maxima above the floor; plateau runs count once.
    std::vector<std::size_t> peaks;
    for (std::size_t j = 0; j < n; ++j) {
        if (density[j] < rel_floor * global_max)
            continue;
        const bool left_ok = (j == 0) || density[j] > density[j - 1];
        const bool right_ok = (j + 1 == n) || density[j] >= density[j + 1];
        if (left_ok && right_ok)
            peaks.push_back(j);
    }
    if (peaks.empty())
        return std::vector<BumpSegment>{};

    // Between adjacent peaks the valley must drop below separation_ratio of
    // the smaller peak, otherwise the bumps overlap and masses are not
    // attributable.
    std::vector<std::size_t> cuts;
    for (std::size_t i = 0; i + 1 < peaks.size(); ++i) {
        std::size_t valley = peaks[i];
        for (std::size_t j = peaks[i]; j <= peaks[i + 1]; ++j)
            if (density[j] < density[valley])
                valley = j;
        const double smaller = std::min(density[peaks[i]], density[peaks[i + 1]]);
        if (density[valley] > separation_ratio * smaller)
            return std::nullopt;
        cuts.push_back(valley);
    }

    std::vector<BumpSegment> segments;
    std::size_t start = 0;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        const std::size_t end = (i < cuts.size()) ? cuts[i] : n - 1;
        BumpSegment seg;
        seg.lo = start;
        seg.hi = end;
        seg.peak = peaks[i];
        seg.mass = row_mass(p, stimulus, start, end);
        segments.push_back(seg);
        start = end + 1 <= n - 1 ? end + 1 : n - 1;
    }
    return segments;
}

} // namespace horizon
