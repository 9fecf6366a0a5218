#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace horizon {

/// Logarithmically spaced timeline nodes tau*_j and their paired rate
/// constants s = k / tau*.
///
/// Exposed nodes run tau_min..tau_max with constant ratio 1+c,
/// c = (tau_max/tau_min)^(1/(n_units-1)) - 1. The s-axis carries k extra
/// nodes beyond each end (same geometric progression) so that the k-th
/// finite-difference derivative stencil is defined at every exposed node.
///
/// Immutable after construction; safe to share across threads.
class TaustarGrid {
public:
    /// Throws std::invalid_argument unless tau_min > 0, tau_max > tau_min,
    /// k >= 1 and n_units >= 2k+1. Endpoint nodes are pinned to tau_min and
    /// tau_max exactly, so rebuilding a grid from taus().front()/back()
    /// reproduces it bit-for-bit.
    TaustarGrid(double tau_min, double tau_max, std::size_t n_units, int k);

    double tau_min() const { return tau_min_; }
    double tau_max() const { return tau_max_; }
    std::size_t n_units() const { return n_units_; }
    int k() const { return k_; }

    /// Spacing constant c: taus[j+1]/taus[j] = 1 + c.
    double spacing_c() const { return c_; }
    /// log(1+c); one node step on the log-lag axis.
    double log_spacing() const { return log1p_c_; }

    /// Exposed |tau*| values, strictly increasing, length n_units().
    std::span<const double> taus() const { return taus_; }
    double tau(std::size_t j) const { return taus_[j]; }

    /// Rate constants over the extended axis (n_units + 2k values, ordered by
    /// increasing tau, hence decreasing s). Exposed node j sits at extended
    /// index j + k.
    std::span<const double> s_values() const { return s_values_; }
    double s_exposed(std::size_t j) const { return s_values_[j + static_cast<std::size_t>(k_)]; }

    /// Post inversion prefactor C_k * s_j^(k+1) with C_k = (-1)^k / k!.
    double post_coeff(std::size_t j) const { return post_coeffs_[j]; }

    /// Number density g = 1/tau*_j of node placement. Diagnostic only: the
    /// cached-value sum realizes g implicitly through node placement.
    /// Throws std::out_of_range.
    double number_density(std::size_t j) const;

    /// Exposed node nearest to a lag (log distance). Throws
    /// std::invalid_argument on non-positive lag.
    std::size_t nearest_node(double tau_star) const;

    /// Band of lags with a full stencil margin inside the grid:
    /// [tau_min*(1+c)^k, tau_max*(1+c)^-k]. Delays outside it are degraded
    /// by boundary effects.
    double interior_lo() const { return interior_lo_; }
    double interior_hi() const { return interior_hi_; }

    bool same_layout(const TaustarGrid& other) const {
        return tau_min_ == other.tau_min_ && tau_max_ == other.tau_max_ &&
               n_units_ == other.n_units_ && k_ == other.k_;
    }

private:
    double tau_min_;
    double tau_max_;
    double c_;
    double log1p_c_;
    std::size_t n_units_;
    int k_;
    double interior_lo_;
    double interior_hi_;
    std::vector<double> taus_;
    std::vector<double> s_values_;
    std::vector<double> post_coeffs_;
};

} // namespace horizon
