#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "horizon/associative_memory.hpp"

namespace horizon {

/// Per-choice exposure bookkeeping carried alongside a trained tensor.
using ChoiceCounts = std::vector<std::pair<std::string, std::uint64_t>>;

/// Decoded snapshot container; self-describing, independent of any live
/// grid or vocabulary.
struct TensorSnapshot {
    double tau_min = 0.0;
    double tau_max = 0.0;
    std::uint32_t n_units = 0;
    std::uint32_t k = 0;
    std::vector<std::string> stimuli;
    std::uint64_t episodes_seen = 0;
    ChoiceCounts episodes_per_choice;
    std::vector<double> values; // (lag, present, past) row-major

    bool uniform_exposure() const;
    /// Exposure count for a choice label, if recorded.
    std::uint64_t exposure_of(std::string_view choice) const; // 0 when absent
};

/// Writes the tensor with its grid parameters, vocabulary, exposure counts
/// and a payload checksum. Bit-exact round trip; the file is written
/// atomically (temp + rename). Throws std::runtime_error on IO failure.
void save_tensor(const AssociativeTensor& tensor, const ChoiceCounts& episodes_per_choice,
                 const std::filesystem::path& destination);

/// Reads and validates a snapshot (magic, version, size, checksum).
/// Throws std::runtime_error on any defect; never returns a partial tensor.
TensorSnapshot read_snapshot(const std::filesystem::path& source);

/// Reads a snapshot and checks it against the running configuration;
/// grid or vocabulary mismatches are errors.
AssociativeTensor load_tensor(const std::filesystem::path& source,
                              std::shared_ptr<const TaustarGrid> grid,
                              std::shared_ptr<const StimulusVocabulary> vocab);

/// Rebuilds grid/vocabulary from the snapshot header and adopts its values.
AssociativeTensor tensor_from_snapshot(const TensorSnapshot& snapshot);

} // namespace horizon
