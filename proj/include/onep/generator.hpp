#pragma once

#include <cstdint>
#include <optional>

#include "onep/drawing.hpp"

namespace onep {

/// Deterministic instance generator configuration. Equal configs produce
/// byte-identical drawings on every platform.
struct GeneratorConfig {
    int n = 10;                     // target true-vertex count, >= 3
    uint64_t seed = 0;
    double crossing_fraction = 0.5; // share of quadrilateral faces that get a crossing
    std::optional<int> max_degree_cap;
};

/// Builds a random plane triangulation (seeded insertions plus edge flips),
/// deletes edges to open quadrilateral faces, then inserts a crossing pair
/// of diagonals into a crossing_fraction share of the quads. The result is
/// always a valid connected drawing of a simple 1-planar graph.
OnePlanarDrawing generate_random_1planar(const GeneratorConfig& cfg);

/// splitmix64: the documented, platform-independent PRNG behind the
/// generator.
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform draw from [0, n) via 128-bit multiply (no modulo bias worth
    /// caring about at these sizes, and bit-for-bit reproducible).
    uint64_t below(uint64_t n) { return static_cast<uint64_t>((static_cast<__uint128_t>(next()) * n) >> 64); }
};

}  // namespace onep
