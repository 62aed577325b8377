#pragma once

#include <cstdint>
#include <cmath>

namespace sdrforge::rng {

// splitmix64 finalizer; also used as the mixing step when deriving keys.
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Purpose tags keep unrelated substreams of one (seed, segment, frame)
// decorrelated. Values are arbitrary fixed constants; changing one changes
// every dataset generated from it.
enum class Purpose : uint64_t {
    swarm_path = 0x01,
    drone_count = 0x02,
    drone_model = 0x03,
    camera = 0x04,
    environment = 0x05,
    distractors = 0x06,
    birds = 0x07,
    background = 0x08,
    augment_subset = 0x09,
    augment_params = 0x0a,
    noise = 0x0b,
};

// Order-independent substream key: every consumer derives its own stream
// from (master_seed, segment, frame, purpose) instead of sharing a
// sequential generator, so frames can be built in any order.
inline uint64_t derive_key(uint64_t master_seed, uint64_t segment,
                           uint64_t frame, Purpose purpose) {
    uint64_t h = mix64(master_seed ^ 0x5d7f0e6e0ull);
    h = mix64(h ^ mix64(segment));
    h = mix64(h ^ mix64(frame));
    h = mix64(h ^ mix64(static_cast<uint64_t>(purpose)));
    return h;
}

// Counter-based stream: state advances by the splitmix64 increment, outputs
// are the finalizer of the state. Identical on every platform.
class Stream {
public:
    explicit Stream(uint64_t key) : state_(key) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t x = state_;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * next_double();
    }

    // Inclusive integer range. Rejection keeps the draw unbiased.
    int64_t uniform_int(int64_t lo, int64_t hi) {
        uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
        uint64_t limit = ~0ull - (~0ull % span);
        uint64_t x;
        do {
            x = next_u64();
        } while (x >= limit);
        return lo + static_cast<int64_t>(x % span);
    }

    // Standard normal via Box-Muller; second value cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        // u1 in (0, 1] so the log is finite.
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = next_double();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

private:
    uint64_t state_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline Stream substream(uint64_t master_seed, uint64_t segment, uint64_t frame,
                        Purpose purpose) {
    return Stream(derive_key(master_seed, segment, frame, purpose));
}

}  // namespace sdrforge::rng
