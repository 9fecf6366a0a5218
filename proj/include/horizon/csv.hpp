#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "horizon/future_engine.hpp"
#include "horizon/laplace_memory.hpp"
#include "horizon/run_config.hpp"

namespace horizon {

/// Comma-separated table with '#'-prefixed header lines. Cells are written
/// with shortest-round-trip number formatting so identical runs produce
/// identical bytes.
class CsvBuilder {
public:
    CsvBuilder& comment(std::string_view line);
    CsvBuilder& config(const RunConfig& config);
    CsvBuilder& grid(const TaustarGrid& grid);
    CsvBuilder& columns(std::string_view names);

    CsvBuilder& cell(std::string_view text);
    CsvBuilder& cell(double value);
    CsvBuilder& cell(std::uint64_t value);
    CsvBuilder& end_row();

    const std::string& text() const { return text_; }
    void save(const std::filesystem::path& path) const;

private:
    std::string text_;
    bool row_open_ = false;
};

/// F snapshot over exposed nodes, rows (tau_star, stimulus, value).
std::string laplace_state_csv(const LaplaceState& state, const RunConfig& config);
/// f~ snapshot, rows (tau_star, stimulus, value).
std::string past_timeline_csv(const PastTimeline& past, double now, const RunConfig& config);
/// Prediction, rows (tau_star, stimulus, probability).
std::string prediction_csv(const FuturePrediction& p, const RunConfig& config,
                           std::string_view extra_comment = {});

} // namespace horizon
