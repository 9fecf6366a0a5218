#include "horizon/tensor_snapshot.hpp"

#include <cstring>
#include <fstream>
#include <stdexcept>

#include "horizon/io_util.hpp"

namespace horizon {

namespace {

constexpr char kMagic[4] = {'H', 'Z', 'T', 'N'};
constexpr std::uint32_t kVersion = 1;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

class Encoder {
public:
    void u32(std::uint32_t v) { raw(&v, sizeof v); }
    void u64(std::uint64_t v) { raw(&v, sizeof v); }
    void f64(double v) { raw(&v, sizeof v); }
    void str(const std::string& s) {
        u32(static_cast<std::uint32_t>(s.size()));
        buffer_.append(s);
    }
    std::string take() { return std::move(buffer_); }

private:
    void raw(const void* p, std::size_t n) {
        buffer_.append(static_cast<const char*>(p), n);
    }
    std::string buffer_;
};

class Decoder {
public:
    explicit Decoder(std::string bytes) : bytes_(std::move(bytes)) {}

    std::uint32_t u32() { return get<std::uint32_t>(); }
    std::uint64_t u64() { return get<std::uint64_t>(); }
    double f64() { return get<double>(); }
    std::string str() {
        const std::uint32_t n = u32();
        need(n);
        std::string s = bytes_.substr(pos_, n);
        pos_ += n;
        return s;
    }
    const std::string& bytes() const { return bytes_; }
    std::size_t pos() const { return pos_; }
    bool exhausted() const { return pos_ == bytes_.size(); }

private:
    template <typename T>
    T get() {
        need(sizeof(T));
        T v;
        std::memcpy(&v, bytes_.data() + pos_, sizeof(T));
        pos_ += sizeof(T);
        return v;
    }
    void need(std::size_t n) const {
        if (pos_ + n > bytes_.size())
            throw std::runtime_error("snapshot: truncated file");
    }
    std::string bytes_;
    std::size_t pos_ = 0;
};

} // namespace

bool TensorSnapshot::uniform_exposure() const {
    for (const auto& [label, count] : episodes_per_choice)
        if (count != episodes_per_choice.front().second)
            return false;
    return true;
}

std::uint64_t TensorSnapshot::exposure_of(std::string_view choice) const {
    for (const auto& [label, count] : episodes_per_choice)
        if (label == choice)
            return count;
    return 0;
}

void save_tensor(const AssociativeTensor& tensor, const ChoiceCounts& episodes_per_choice,
                 const std::filesystem::path& destination) {
    Encoder enc;
    enc.u32(kVersion);
    enc.f64(tensor.grid().tau_min());
    enc.f64(tensor.grid().tau_max());
    enc.u32(static_cast<std::uint32_t>(tensor.grid().n_units()));
    enc.u32(static_cast<std::uint32_t>(tensor.grid().k()));
    enc.u32(static_cast<std::uint32_t>(tensor.vocab().size()));
    for (const auto& name : tensor.vocab().names())
        enc.str(name);
    enc.u64(tensor.episodes_seen());
    enc.u32(static_cast<std::uint32_t>(episodes_per_choice.size()));
    for (const auto& [label, count] : episodes_per_choice) {
        enc.str(label);
        enc.u64(count);
    }
    enc.u64(tensor.values().size());
    for (double v : tensor.values())
        enc.f64(v);

    std::string body = enc.take();
    std::string file(kMagic, sizeof kMagic);
    file += body;
    const std::uint64_t checksum = fnv1a(body);
    file.append(reinterpret_cast<const char*>(&checksum), sizeof checksum);
    atomic_write_file(destination, file);
}

TensorSnapshot read_snapshot(const std::filesystem::path& source) {
    std::string file = read_file(source);
    if (file.size() < sizeof kMagic + sizeof(std::uint64_t) ||
        std::memcmp(file.data(), kMagic, sizeof kMagic) != 0)
        throw std::runtime_error("snapshot: not a tensor snapshot file: " + source.string());

    std::uint64_t stored_checksum;
    std::memcpy(&stored_checksum, file.data() + file.size() - sizeof stored_checksum,
                sizeof stored_checksum);
    std::string body = file.substr(sizeof kMagic, file.size() - sizeof kMagic - sizeof stored_checksum);
    if (fnv1a(body) != stored_checksum)
        throw std::runtime_error("snapshot: checksum mismatch (corrupt file): " + source.string());

    Decoder dec(std::move(body));
    const std::uint32_t version = dec.u32();
    if (version != kVersion)
        throw std::runtime_error("snapshot: unsupported format version " + std::to_string(version));

    TensorSnapshot snap;
    snap.tau_min = dec.f64();
    snap.tau_max = dec.f64();
    snap.n_units = dec.u32();
    snap.k = dec.u32();
    const std::uint32_t n_stim = dec.u32();
    snap.stimuli.reserve(n_stim);
    for (std::uint32_t i = 0; i < n_stim; ++i)
        snap.stimuli.push_back(dec.str());
    snap.episodes_seen = dec.u64();
    const std::uint32_t n_choices = dec.u32();
    for (std::uint32_t i = 0; i < n_choices; ++i) {
        std::string label = dec.str();
        const std::uint64_t count = dec.u64();
        snap.episodes_per_choice.emplace_back(std::move(label), count);
    }
    const std::uint64_t n_values = dec.u64();
    const std::uint64_t expected =
        static_cast<std::uint64_t>(snap.n_units) * n_stim * n_stim;
    if (n_values != expected)
        throw std::runtime_error("snapshot: payload size does not match header");
    snap.values.reserve(n_values);
    for (std::uint64_t i = 0; i < n_values; ++i)
        snap.values.push_back(dec.f64());
    if (!dec.exhausted())
        throw std::runtime_error("snapshot: trailing bytes after payload");
    return snap;
}

AssociativeTensor load_tensor(const std::filesystem::path& source,
                              std::shared_ptr<const TaustarGrid> grid,
                              std::shared_ptr<const StimulusVocabulary> vocab) {
    TensorSnapshot snap = read_snapshot(source);
    if (snap.tau_min != grid->tau_min() || snap.tau_max != grid->tau_max() ||
        snap.n_units != grid->n_units() || static_cast<int>(snap.k) != grid->k())
        throw std::runtime_error("snapshot: grid parameters do not match the running configuration");
    if (snap.stimuli != vocab->names())
        throw std::runtime_error("snapshot: vocabulary does not match the running configuration");

    AssociativeTensor tensor(std::move(grid), std::move(vocab));
    auto dst = tensor.mutable_values();
    std::copy(snap.values.begin(), snap.values.end(), dst.begin());
    tensor.add_episodes(snap.episodes_seen);
    return tensor;
}

AssociativeTensor tensor_from_snapshot(const TensorSnapshot& snapshot) {
    auto grid = std::make_shared<const TaustarGrid>(snapshot.tau_min, snapshot.tau_max,
                                                    snapshot.n_units,
                                                    static_cast<int>(snapshot.k));
    auto vocab = std::make_shared<const StimulusVocabulary>(snapshot.stimuli);
    AssociativeTensor tensor(std::move(grid), std::move(vocab));
    auto dst = tensor.mutable_values();
    std::copy(snapshot.values.begin(), snapshot.values.end(), dst.begin());
    tensor.add_episodes(snapshot.episodes_seen);
    return tensor;
}

} // namespace horizon
