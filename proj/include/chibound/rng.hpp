#pragma once

// Seeded randomness for generators and sampling. One engine per task so
// results are reproducible from a single seed.

#include <cstdint>
#include <random>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    // Uniform integer in [lo, hi], inclusive.
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }

    bool chance(double p) {
        return std::bernoulli_distribution(p)(eng_);
    }

    uint64_t next_u64() { return eng_(); }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), eng_);
    }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[uniform(0, int(v.size()) - 1)];
    }

    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

// G(n, p) with independent edge coin flips.
inline Graph random_graph(Rng& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance(p)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

} // namespace chibound
