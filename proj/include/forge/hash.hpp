#pragma once

#include <cstdint>
#include <string_view>

namespace forge {

inline constexpr std::uint64_t kFnvOffset = 14695981039346656037ull;

// FNV-1a, chainable: pass the previous value as `h` to hash multiple
// buffers as one stream.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = kFnvOffset) noexcept {
    constexpr std::uint64_t prime = 1099511628211ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= prime;
    }
    return h;
}

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Stable per-stream seed derivation from (master seed, stream tag, index).
// Generation shards its work by instruction index through this, so output
// never depends on how many workers ran.
inline std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag,
                              std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed ^ fnv1a64(tag)) + index);
}

}  // namespace forge
