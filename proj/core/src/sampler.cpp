#include "pns/sampler.hpp"

#include <stdexcept>

namespace pns {

std::vector<Vector> sample_vectors(std::uint64_t seed, int dimension, int count,
                                   std::span<const Rat> boundary_gauges) {
    if (dimension < 1) throw std::invalid_argument("dimension must be positive");
    if (count < 1) throw std::invalid_argument("sample count must be positive");

    std::vector<Vector> out;
    out.reserve(static_cast<std::size_t>(count));
    out.push_back(Vector::zero(dimension));
    for (int i = 0; i < dimension && static_cast<int>(out.size()) < count; ++i) {
        out.push_back(Vector::unit(dimension, i));
        if (static_cast<int>(out.size()) < count) out.push_back(-Vector::unit(dimension, i));
    }
    for (const Rat& g : boundary_gauges) {
        if (static_cast<int>(out.size()) >= count) break;
        out.push_back(scale(g, Vector::unit(dimension, 0)));
    }

    Rng rng(seed);
    while (static_cast<int>(out.size()) < count) {
        Vector v = Vector::zero(dimension);
        long e = rng.next_in(0, 3);
        for (int i = 0; i < dimension; ++i) {
            long k = rng.next_in(-8, 8);
            v.coords[static_cast<std::size_t>(i)] = Rat(k, 1L << e);
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<std::pair<Vector, Vector>> sample_pairs(std::span<const Vector> samples, int count,
                                                    std::uint64_t seed) {
    if (samples.empty()) throw std::invalid_argument("sample set is empty");
    Rng rng(seed);
    std::vector<std::pair<Vector, Vector>> out;
    out.reserve(static_cast<std::size_t>(count));
    const long n = static_cast<long>(samples.size());
    for (int i = 0; i < count; ++i) {
        const Vector& a = samples[static_cast<std::size_t>(rng.next_in(0, n - 1))];
        const Vector& b = samples[static_cast<std::size_t>(rng.next_in(0, n - 1))];
        // occasionally pair with a negation so sums hit the origin
        if (i % 8 == 7)
            out.emplace_back(a, -a);
        else
            out.emplace_back(a, b);
    }
    return out;
}

std::vector<std::array<Vector, 3>> sample_triples(std::span<const Vector> samples, int count,
                                                  std::uint64_t seed) {
    if (samples.empty()) throw std::invalid_argument("sample set is empty");
    Rng rng(seed);
    std::vector<std::array<Vector, 3>> out;
    out.reserve(static_cast<std::size_t>(count));
    const long n = static_cast<long>(samples.size());
    for (int i = 0; i < count; ++i) {
        out.push_back({samples[static_cast<std::size_t>(rng.next_in(0, n - 1))],
                       samples[static_cast<std::size_t>(rng.next_in(0, n - 1))],
                       samples[static_cast<std::size_t>(rng.next_in(0, n - 1))]});
    }
    return out;
}

}  // namespace pns
