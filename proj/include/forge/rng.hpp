#pragma once

#include <cstdint>
#include <random>

namespace forge {

// Deterministic random source. std::mt19937_64 has a standard-mandated
// output sequence; the draws below avoid std::uniform_*_distribution, whose
// results differ between standard libraries. Identical seeds therefore give
// identical streams on every toolchain, which the byte-identical dataset
// guarantee depends on.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform on [0, bound); rejection sampling kills the modulo bias
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

    // uniform integer on [lo, hi], inclusive
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    // 53-bit resolution, [0, 1)
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // 53-bit resolution, (0, 1]
    double unit_pos() { return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

private:
    std::mt19937_64 engine_;
};

}  // namespace forge
