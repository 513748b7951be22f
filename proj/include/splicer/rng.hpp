#pragma once

#include <cstdint>

namespace splicer {

// Deterministic splitmix64 stream. Identical (seed, stream_id) reproduces the
// same draws on every platform; substreams are derived by hashing, so trials
// and trees can own independent streams without coordination.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed, std::uint64_t stream_id = 0)
        : seed_(seed), stream_id_(stream_id), state_(mix(seed ^ mix(stream_id + 0x9e3779b97f4a7c15ull))) {}

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        return mix(state_);
    }

    // Unbiased integer in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = ~0ull - ~0ull % bound;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Child stream; ids chain so substreams of substreams stay distinct.
    RngStream substream(std::uint64_t id) const {
        return RngStream(seed_, mix(stream_id_ + 0x632be59bd9b4e019ull) ^ id);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t state_;
};

}  // namespace splicer
