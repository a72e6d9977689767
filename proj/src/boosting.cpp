#include "hkfree/boosting.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace hkfree {

SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
    // decorrelate trials by launching each stream from a mixed counter
    SplitMix64 mixer(seed + 0x632be59bd9b4e019ull * (trial + 1));
    return SplitMix64(mixer.next());
}

ExpectedSize expected_size_exact(std::uint64_t set_size, int n, int s) {
    if (s < 2) throw std::invalid_argument("expected_size_exact: s must be >= 2");
    int128 size = (int128)set_size;
    Rational pair_term(checked_mul(checked_mul((int128)(s - 1), (int128)(s - 2)) / 2,
                                   checked_mul(size, size)),
                       pow2_int128(n));
    Rational lower = Rational(checked_mul((int128)(s - 1), size)) - pair_term;
    return ExpectedSize{pair_term, lower};
}

BoostResult boost(const CertifiedSet& independent, int s, std::uint64_t trials,
                  std::uint64_t seed) {
    if (independent.kind != CertKind::independent)
        throw std::invalid_argument("boost: input set does not carry an independent certificate");
    if (s < 2) throw std::invalid_argument("boost: s must be >= 2");
    if (trials < 1) throw std::invalid_argument("boost: need at least one trial");
    int n = independent.params.n;
    const auto& base = independent.vertices;

    BoostResult result;
    result.params = independent.params;
    result.params.s = s;
    result.seed = seed;
    result.trials = trials;
    result.bound = expected_size_exact(base.size(), n, s).lower_bound;

    if (s == 2) {
        result.set = independent;
        result.size = base.size();
        result.below_bound = Rational((int128)result.size) < result.bound;
        return result;
    }

    Vertex mask = (n == 64) ? ~Vertex{0} : (Vertex{1} << n) - 1;
    std::vector<Vertex> best_translates;
    std::uint64_t best_size = 0, best_trial = 0;
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 stream = trial_stream(seed, trial);
        std::vector<Vertex> us(s - 2);
        for (auto& u : us) u = stream.next() & mask;
        std::unordered_set<Vertex> unioned(base.begin(), base.end());
        for (Vertex u : us)
            for (Vertex x : base) unioned.insert(x ^ u);
        std::uint64_t size = unioned.size();
        if (size > best_size) { // strictly-better keeps best-of-trials monotone
            best_size = size;
            best_trial = trial;
            best_translates = us;
        }
    }

    result.translates = best_translates;
    result.best_trial = best_trial;
    result.size = best_size;
    result.below_bound = Rational((int128)best_size) < result.bound;

    std::vector<Vertex> vertices(base.begin(), base.end());
    for (Vertex u : best_translates)
        for (Vertex x : base) vertices.push_back(x ^ u);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

    result.set.params = result.params;
    result.set.vertices = std::move(vertices);
    result.set.kind = CertKind::ks_free;
    result.set.verified = false; // union of s-1 independent translates; re-verify to upgrade
    result.set.method = "translate_boost";
    return result;
}

} // namespace hkfree
