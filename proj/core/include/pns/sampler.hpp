#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pns/vector.hpp"

namespace pns {

// splitmix64. Fixed algorithm so that identical seeds give bit-identical
// sample sets on every platform; no standard-library distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish in [lo, hi]; fine for sample generation.
    long next_in(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::uint64_t state_;
};

// Deterministic sample set: the origin, +-unit vectors, one vector of plain
// value g along the first axis for every g in `boundary_gauges`, then random
// vectors with coordinates k/2^e, k in [-8, 8], e in [0, 3]. Exactly `count`
// vectors (truncated or padded with random ones).
std::vector<Vector> sample_vectors(std::uint64_t seed, int dimension, int count,
                                   std::span<const Rat> boundary_gauges);

// Deterministic pair/triple builders over a sample set.
std::vector<std::pair<Vector, Vector>> sample_pairs(std::span<const Vector> samples, int count,
                                                    std::uint64_t seed);
std::vector<std::array<Vector, 3>> sample_triples(std::span<const Vector> samples, int count,
                                                  std::uint64_t seed);

}  // namespace pns
