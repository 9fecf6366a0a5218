#include "horizon/laplace_memory.hpp"

#include <cmath>
#include <stdexcept>

namespace horizon {

PastTimeline::PastTimeline(std::shared_ptr<const TaustarGrid> grid,
                           std::shared_ptr<const StimulusVocabulary> vocab)
    : grid_(std::move(grid)), vocab_(std::move(vocab)),
      values_(grid_->n_units() * vocab_->size(), 0.0) {}

LaplaceState::LaplaceState(std::shared_ptr<const TaustarGrid> grid,
                           std::shared_ptr<const StimulusVocabulary> vocab)
    : grid_(std::move(grid)), vocab_(std::move(vocab)),
      values_(grid_->s_values().size() * vocab_->size(), 0.0) {}

void LaplaceState::decay(double dt) {
    if (dt < 0.0)
        throw std::invalid_argument("laplace state: negative decay interval");
    if (dt == 0.0)
        return;
    const auto s = grid_->s_values();
    const std::size_t n_stim = vocab_->size();
    for (std::size_t e = 0; e < s.size(); ++e) {
        const double factor = std::exp(-s[e] * dt);
        double* row = values_.data() + e * n_stim;
        for (std::size_t i = 0; i < n_stim; ++i)
            row[i] *= factor;
    }
    now_ += dt;
}

void LaplaceState::inject(std::string_view stimulus, double magnitude) {
    inject(vocab_->index_of(stimulus), magnitude);
}

void LaplaceState::inject(std::size_t stimulus, double magnitude) {
    if (stimulus >= vocab_->size())
        throw std::invalid_argument("laplace state: stimulus index out of range");
    const std::size_t n_stim = vocab_->size();
    const std::size_t n_ext = grid_->s_values().size();
    for (std::size_t e = 0; e < n_ext; ++e)
        values_[e * n_stim + stimulus] += magnitude;
}

void LaplaceState::step_constant(std::span<const double> input, double dt) {
    if (dt < 0.0)
        throw std::invalid_argument("laplace state: negative step interval");
    if (input.size() != vocab_->size())
        throw std::invalid_argument("laplace state: input size does not match vocabulary");
    if (dt == 0.0)
        return;
    const auto s = grid_->s_values();
    const std::size_t n_stim = vocab_->size();
    for (std::size_t e = 0; e < s.size(); ++e) {
        const double decay_factor = std::exp(-s[e] * dt);
        const double charge = -std::expm1(-s[e] * dt) / s[e]; // (1 - e^{-s dt}) / s
        double* row = values_.data() + e * n_stim;
        for (std::size_t i = 0; i < n_stim; ++i)
            row[i] = row[i] * decay_factor + input[i] * charge;
    }
    now_ += dt;
}

void LaplaceState::reset() {
    values_.assign(values_.size(), 0.0);
    now_ = 0.0;
}

PastTimeline LaplaceState::invert() const {
    const auto s = grid_->s_values();
    const std::size_t n_ext = s.size();
    const std::size_t n_stim = vocab_->size();
    const auto k = static_cast<std::size_t>(grid_->k());

    // Two ping-pong buffers over the extended axis; valid band shrinks by one
    // node per side per pass.
    std::vector<double> work_a(values_.begin(), values_.end());
    std::vector<double> work_b(values_.size());
    double* cur = work_a.data();
    double* next = work_b.data();
    for (std::size_t pass = 1; pass <= k; ++pass) {
        for (std::size_t e = pass; e + pass < n_ext; ++e) {
            const double inv_ds = 1.0 / (s[e + 1] - s[e - 1]);
            const double* hi = cur + (e + 1) * n_stim;
            const double* lo = cur + (e - 1) * n_stim;
            double* out = next + e * n_stim;
            for (std::size_t i = 0; i < n_stim; ++i)
                out[i] = (hi[i] - lo[i]) * inv_ds;
        }
        std::swap(cur, next);
    }

    PastTimeline past(grid_, vocab_);
    for (std::size_t j = 0; j < grid_->n_units(); ++j) {
        const double coeff = grid_->post_coeff(j);
        const double* src = cur + (j + k) * n_stim;
        double* dst = past.values_.data() + j * n_stim;
        for (std::size_t i = 0; i < n_stim; ++i)
            dst[i] = coeff * src[i];
    }
    return past;
}

double impulse_response_analytic(const TaustarGrid& grid, double tau_star, double t) {
    if (!(tau_star > 0.0))
        throw std::invalid_argument("impulse response: tau_star must be positive");
    if (t < 0.0)
        return 0.0;
    const auto k = static_cast<double>(grid.k());
    const double coeff = std::pow(k, k + 1.0) / std::tgamma(k + 1.0);
    const double x = t / tau_star;
    return coeff / tau_star * std::pow(x, k) * std::exp(-k * x);
}

} // namespace horizon
