#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace horizon {

/// Ordered set of distinct stimulus identifiers (states), including reward
/// states. Index lookup is total over the stored names.
class StimulusVocabulary {
public:
    explicit StimulusVocabulary(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty())
                throw std::invalid_argument("vocabulary: empty stimulus name");
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("vocabulary: duplicate stimulus name '" + names_[i] + "'");
        }
    }

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }

    bool contains(std::string_view name) const { return find(name).has_value(); }

    std::optional<std::size_t> find(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    /// Throws std::invalid_argument on unknown names.
    std::size_t index_of(std::string_view name) const {
        if (auto i = find(name)) return *i;
        throw std::invalid_argument("vocabulary: unknown stimulus '" + std::string(name) + "'");
    }

    bool operator==(const StimulusVocabulary& other) const { return names_ == other.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

} // namespace horizon
