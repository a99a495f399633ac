#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace dgl {

// All randomness flows from one root seed, split per stage by stable labels
// (FNV-1a over the label, mixed with the root).
inline std::uint64_t split_seed(std::uint64_t root, std::string_view label) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : label) {
        h ^= static_cast<std::uint8_t>(c);
        h *= 0x100000001b3ULL;
    }
    h ^= root + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

using Rng = std::mt19937_64;

}  // namespace dgl
