#include "doctest.h"

#include <cmath>

#include "hkfree/bch_coloring.hpp"
#include "hkfree/boosting.hpp"
#include "hkfree/exact.hpp"

using namespace hkfree;

namespace {

CertifiedSet tiny_independent() {
    CertifiedSet I;
    I.params = CubeParams::make(3, 2, 2);
    I.vertices = {0b000, 0b111};
    I.kind = CertKind::independent;
    I.verified = true;
    I.method = "hand";
    return I;
}

} // namespace

TEST_CASE("closed-form bound and exact expectation for the tiny set") {
    auto e = expected_size_exact(2, 3, 3);
    CHECK(e.pair_term == Rational(1, 2));
    CHECK(e.lower_bound == Rational(7, 2));
    // oracle: average |I u (I+u)| over all 8 translates of I = {000, 111}
    auto I = tiny_independent();
    int total = 0;
    for (Vertex u = 0; u < 8; ++u) {
        auto shifted = translate(I.vertices, u, 3);
        std::vector<Vertex> uni(I.vertices);
        for (Vertex x : shifted)
            if (std::find(uni.begin(), uni.end(), x) == uni.end()) uni.push_back(x);
        total += (int)uni.size();
    }
    CHECK(Rational(total, 8) == Rational(7, 2)); // E|S| = 3.5, matches the closed form at s=3
    // s=2: no random translates at all
    auto e2 = expected_size_exact(5, 4, 2);
    CHECK(e2.pair_term == Rational(0));
    CHECK(e2.lower_bound == Rational(5));
}

TEST_CASE("boost on the tiny set reaches 4 and stays triangle-free") {
    auto I = tiny_independent();
    auto res = boost(I, 3, 16, 1);
    CHECK(res.bound == Rational(7, 2));
    CHECK(res.size == 4);
    CHECK_FALSE(res.below_bound);
    CHECK(res.set.kind == CertKind::ks_free);
    CHECK_FALSE(contains_ks(res.set.vertices, res.params, 3).has_value());
}

TEST_CASE("s=2 returns the input unchanged; bad inputs are rejected") {
    auto I = tiny_independent();
    auto res = boost(I, 2, 5, 9);
    CHECK(res.set.vertices == I.vertices);
    CHECK(res.size == 2);
    CertifiedSet bogus = I;
    bogus.kind = CertKind::unverified;
    CHECK_THROWS(boost(bogus, 3, 1, 0));
    CHECK_THROWS(boost(I, 1, 1, 0));
    CHECK_THROWS(boost(I, 3, 0, 0));
}

TEST_CASE("boost outputs are K_s-free regardless of trial luck") {
    for (int n : {6, 8}) {
        auto fc = build_fiber_coloring(CubeParams::make(n, 2));
        auto I = independent_set_from_fiber(fc, 0);
        for (int s : {3, 4})
            for (std::uint64_t seed : {0ull, 5ull, 77ull}) {
                auto res = boost(I, s, 4, seed);
                REQUIRE_FALSE(contains_ks(res.set.vertices, res.params, s).has_value());
                REQUIRE(res.size == res.set.vertices.size());
                REQUIRE(res.size <= (std::uint64_t)(s - 1) * I.vertices.size());
            }
    }
}

TEST_CASE("each winning translate of I is itself independent") {
    auto fc = build_fiber_coloring(CubeParams::make(8, 2));
    auto I = independent_set_from_fiber(fc, 0);
    auto res = boost(I, 4, 10, 3);
    for (Vertex u : res.translates) {
        auto shifted = translate(I.vertices, u, 8);
        REQUIRE_FALSE(contains_ks(shifted, CubeParams::make(8, 2, 2), 2).has_value());
    }
}

TEST_CASE("best-of-trials is monotone in the trial count for a fixed seed") {
    auto fc = build_fiber_coloring(CubeParams::make(6, 2));
    auto I = independent_set_from_fiber(fc, 1);
    std::uint64_t prev = 0;
    for (std::uint64_t trials = 1; trials <= 24; ++trials) {
        auto res = boost(I, 3, trials, 42);
        REQUIRE(res.size >= prev);
        prev = res.size;
    }
}

TEST_CASE("determinism: same seed same result, trial streams reproducible") {
    auto fc = build_fiber_coloring(CubeParams::make(7, 2));
    auto I = independent_set_from_fiber(fc, 2);
    auto a = boost(I, 3, 50, 1234);
    auto b = boost(I, 3, 50, 1234);
    CHECK(a.size == b.size);
    CHECK(a.translates == b.translates);
    CHECK(a.best_trial == b.best_trial);
    auto s1 = trial_stream(9, 4);
    auto s2 = trial_stream(9, 4);
    CHECK(s1.next() == s2.next());
    CHECK(trial_stream(9, 4).next() != trial_stream(9, 5).next());
}

TEST_CASE("first-moment consistency over a thousand seeded trials") {
    auto fc = build_fiber_coloring(CubeParams::make(8, 2));
    auto I = independent_set_from_fiber(fc, 0);
    const int s = 3;
    const int T = 1000;
    double bound = expected_size_exact(I.vertices.size(), 8, s).lower_bound.approx();
    // run each trial separately so the sample of sizes is visible
    double sum = 0, sumsq = 0;
    Vertex mask = (Vertex{1} << 8) - 1;
    for (int trial = 0; trial < T; ++trial) {
        auto stream = trial_stream(0, (std::uint64_t)trial);
        Vertex u = stream.next() & mask;
        auto shifted = translate(I.vertices, u, 8);
        std::vector<Vertex> uni(I.vertices);
        for (Vertex x : shifted)
            if (!std::binary_search(I.vertices.begin(), I.vertices.end(), x)) uni.push_back(x);
        double size = (double)uni.size();
        sum += size;
        sumsq += size * size;
    }
    double mean = sum / T;
    double var = sumsq / T - mean * mean;
    double sd = std::sqrt(var > 0 ? var : 0);
    CHECK(mean >= bound - 3 * sd / std::sqrt((double)T));
}

TEST_CASE("boosting the n=8 fiber: best of 1000 trials meets the floor bound") {
    auto fc = build_fiber_coloring(CubeParams::make(8, 2));
    auto I = independent_set_from_fiber(fc, 0);
    REQUIRE(I.vertices.size() == 32);
    auto res = boost(I, 3, 1000, 0);
    // floor((s-1)|I|(1 - (s-2)|I|/2^{n+1})) = floor(64 * 15/16) = 60
    CHECK(res.bound == Rational(60));
    CHECK(res.size >= 60);
    CHECK_FALSE(contains_ks(res.set.vertices, res.params, 3).has_value());
}
