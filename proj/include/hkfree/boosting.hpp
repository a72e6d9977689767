#pragma once

// Random-translate amplification: from an independent set I, the union
// S = I u (I+u_1) u ... u (I+u_{s-2}) over uniform translates is K_s-free
// unconditionally, and E|S| >= (s-1)|I| (1 - (s-2)/2 * |I|/2^n).

#include <cstdint>
#include <vector>

#include "hkfree/cube.hpp"
#include "hkfree/rational.hpp"

namespace hkfree {

// splitmix64: the per-trial stream is seeded by (seed, trial index) only,
// so trial outcomes are reproducible and independent of evaluation order.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial);

struct BoostResult {
    CubeParams params;
    std::vector<Vertex> translates; // u_1..u_{s-2} of the winning trial (u_0 = 0 implied)
    CertifiedSet set;
    std::uint64_t size = 0;
    Rational bound;      // (s-1)|I|(1 - (s-2)/2 * |I|/2^n)
    bool below_bound = false; // best-of-trials landed under the bound (flag, not failure)
    std::uint64_t trials = 0;
    std::uint64_t best_trial = 0;
    std::uint64_t seed = 0;
};

// Best-of-trials boost. I must carry an independent certificate; s = 2
// returns I unchanged. Deterministic given (seed, trials).
BoostResult boost(const CertifiedSet& independent, int s, std::uint64_t trials,
                  std::uint64_t seed);

struct ExpectedSize {
    Rational pair_term;    // C(s-1,2) |I|^2 / 2^n, the exact pairwise expectation total
    Rational lower_bound;  // (s-1)|I| - pair_term (the closed form; exact E|S| for s <= 3)
};

ExpectedSize expected_size_exact(std::uint64_t set_size, int n, int s);

} // namespace hkfree
