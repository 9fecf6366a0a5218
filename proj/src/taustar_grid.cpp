#include "horizon/taustar_grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace horizon {

TaustarGrid::TaustarGrid(double tau_min, double tau_max, std::size_t n_units, int k)
    : tau_min_(tau_min), tau_max_(tau_max), n_units_(n_units), k_(k) {
    if (!(tau_min > 0.0))
        throw std::invalid_argument("taustar grid: tau_min must be positive");
    if (!(tau_max > tau_min))
        throw std::invalid_argument("taustar grid: tau_max must exceed tau_min");
    if (k < 1)
        throw std::invalid_argument("taustar grid: k must be >= 1");
    const auto min_units = 2 * static_cast<std::size_t>(k) + 1;
    if (n_units < min_units)
        throw std::invalid_argument("taustar grid: n_units must be >= 2k+1 = " +
                                    std::to_string(min_units));

    const double span = tau_max / tau_min;
    const double denom = static_cast<double>(n_units - 1);
    c_ = std::pow(span, 1.0 / denom) - 1.0;
    log1p_c_ = std::log1p(c_);

    // Extended tau axis: indices -k .. n_units-1+k, one pow per node so that
    // rebuilding from the same endpoints is bit-stable.
    const std::size_t n_ext = n_units + 2 * static_cast<std::size_t>(k);
    taus_.resize(n_units);
    s_values_.resize(n_ext);
    for (std::size_t e = 0; e < n_ext; ++e) {
        const auto i = static_cast<long long>(e) - k;
        double tau;
        if (i == 0)
            tau = tau_min;
        else if (i == static_cast<long long>(n_units) - 1)
            tau = tau_max;
        else
            tau = tau_min * std::pow(span, static_cast<double>(i) / denom);
        if (i >= 0 && i < static_cast<long long>(n_units))
            taus_[static_cast<std::size_t>(i)] = tau;
        s_values_[e] = static_cast<double>(k) / tau;
    }

    const double ck = (k % 2 == 0 ? 1.0 : -1.0) / std::tgamma(static_cast<double>(k) + 1.0);
    post_coeffs_.resize(n_units);
    for (std::size_t j = 0; j < n_units; ++j)
        post_coeffs_[j] = ck * std::pow(s_exposed(j), static_cast<double>(k) + 1.0);

    interior_lo_ = tau_min * std::pow(1.0 + c_, static_cast<double>(k));
    interior_hi_ = tau_max * std::pow(1.0 + c_, -static_cast<double>(k));
}

double TaustarGrid::number_density(std::size_t j) const {
    if (j >= n_units_)
        throw std::out_of_range("taustar grid: node index " + std::to_string(j) +
                                " out of range (n_units = " + std::to_string(n_units_) + ")");
    return 1.0 / taus_[j];
}

std::size_t TaustarGrid::nearest_node(double tau_star) const {
    if (!(tau_star > 0.0))
        throw std::invalid_argument("taustar grid: lag must be positive");
    const double pos = std::log(tau_star / tau_min_) / log1p_c_;
    const auto rounded = static_cast<long long>(std::llround(pos));
    if (rounded < 0) return 0;
    if (rounded >= static_cast<long long>(n_units_)) return n_units_ - 1;
    return static_cast<std::size_t>(rounded);
}

} // namespace horizon
