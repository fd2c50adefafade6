#pragma once

#include <cstdint>
#include <string_view>

namespace laukit {

// Counter-based pseudo-random stream: value(key, i) depends only on (key, i),
// so disjoint index ranges can be drawn independently and in parallel while
// producing the identical stream. The mixer is the splitmix64 finalizer.

constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t counter_stream(std::uint64_t key, std::uint64_t index) {
    return mix64(key + index * 0x9e3779b97f4a7c15ULL);
}

/// FNV-1a of `text` folded with `seed`; used to key streams by
/// (algebra name, seed).
constexpr std::uint64_t stream_key(std::string_view text, std::uint64_t seed) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : text) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return mix64(h ^ mix64(seed));
}

/// Map a stream word to a double in [-1, 1].
inline double unit_double(std::uint64_t word) {
    return static_cast<double>(word >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

}  // namespace laukit
