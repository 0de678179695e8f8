#pragma once

#include <cstdint>
#include <cmath>

namespace cvsim {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Identity of a random stream. Two streams with equal (seed, stream)
/// produce identical draw sequences; distinct stream values give
/// statistically independent sequences.
struct StreamKey {
    uint64_t seed = 0;
    uint64_t stream = 0;

    StreamKey substream(uint64_t index) const {
        // Multiplication by an odd constant is a bijection mod 2^64, so
        // distinct indices map to distinct stream ids.
        return {seed, splitmix64(stream + 0x9E3779B97F4A7C15ull * (index + 1))};
    }
};

/// Philox4x32-10 counter-based generator (Salmon et al., SC 2011).
///
/// The key holds the seed, the high counter words hold the stream id, and
/// the low counter words advance one per 128-bit block. Draws depend only
/// on (seed, stream, position), never on thread scheduling.
class RngStream {
public:
    explicit RngStream(StreamKey key) {
        key0_ = static_cast<uint32_t>(key.seed);
        key1_ = static_cast<uint32_t>(key.seed >> 32);
        ctr_[0] = 0;
        ctr_[1] = 0;
        ctr_[2] = static_cast<uint32_t>(key.stream);
        ctr_[3] = static_cast<uint32_t>(key.stream >> 32);
    }

    RngStream(uint64_t seed, uint64_t stream) : RngStream(StreamKey{seed, stream}) {}

    uint64_t next_u64() {
        if (avail_ < 2) next_block();
        avail_ -= 2;
        return (static_cast<uint64_t>(out_[avail_ + 1]) << 32) | out_[avail_];
    }

    /// Uniform double in [0, 1), 53 random bits.
    double next_uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; one cached value per pair.
    double next_normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        // u1 in (0, 1] so the log is finite.
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
        double u2 = next_uniform();
        double radius = std::sqrt(-2.0 * std::log(u1));
        double angle = 6.283185307179586476925286766559 * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

private:
    static constexpr uint32_t kMult0 = 0xD2511F53u;
    static constexpr uint32_t kMult1 = 0xCD9E8D57u;
    static constexpr uint32_t kBump0 = 0x9E3779B9u;
    static constexpr uint32_t kBump1 = 0xBB67AE85u;

    static void round(uint32_t c[4], const uint32_t k[2]) {
        uint64_t p0 = static_cast<uint64_t>(kMult0) * c[0];
        uint64_t p1 = static_cast<uint64_t>(kMult1) * c[2];
        uint32_t out0 = static_cast<uint32_t>(p1 >> 32) ^ c[1] ^ k[0];
        uint32_t out1 = static_cast<uint32_t>(p1);
        uint32_t out2 = static_cast<uint32_t>(p0 >> 32) ^ c[3] ^ k[1];
        uint32_t out3 = static_cast<uint32_t>(p0);
        c[0] = out0;
        c[1] = out1;
        c[2] = out2;
        c[3] = out3;
    }

    void next_block() {
        uint32_t c[4] = {ctr_[0], ctr_[1], ctr_[2], ctr_[3]};
        uint32_t k[2] = {key0_, key1_};
        for (int i = 0; i < 10; ++i) {
            if (i > 0) {
                k[0] += kBump0;
                k[1] += kBump1;
            }
            round(c, k);
        }
        out_[0] = c[0];
        out_[1] = c[1];
        out_[2] = c[2];
        out_[3] = c[3];
        avail_ = 4;
        if (++ctr_[0] == 0) ++ctr_[1];
    }

    uint32_t key0_, key1_;
    uint32_t ctr_[4];
    uint32_t out_[4] = {0, 0, 0, 0};
    int avail_ = 0;
    double cached_ = 0.0;
    bool have_cached_ = false;
};

}  // namespace cvsim
