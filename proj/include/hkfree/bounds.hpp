#pragma once

// Evaluates the explicit bound formulas for a parameter triple (n, r=2t, s)
// and assembles them into a report next to construction sizes and exact
// values. Asymptotic formulas are labeled as such and never enter hard
// ordering checks; finite-n inequalities do.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hkfree/rational.hpp"

namespace hkfree {

struct PrimePowerUpperBound {
    int i = 0;
    Rational coefficient; // (2t-1+i)! / (t-1+i)!
    Rational value;       // coefficient * 2^n / n^t
};

// Present iff t+i is a prime power.
std::optional<PrimePowerUpperBound> eval_prime_power_upper(int n, int t, int i);

// C(n, q-1); q must be a prime power.
int128 eval_frankl_wilson(int n, std::uint64_t q);

struct LowerBounds {
    Rational leading_general;      // (s-1)/(t+1) * 2^n / n^t
    Rational leading_subsequence;  // (s-1) * 2^n / n^t
    int subseq_m = 0;              // witnessing n = 2^m - k
    int subseq_k = 0;              // smallest k >= 1
};

LowerBounds eval_lower_bounds(int n, int t, int s);

struct TransferBound {
    int k = 0;
    std::uint64_t m_value = 0; // exact m_s(n, k, k-t)
    Rational bound;            // 2^n * m_value / C(n,k)
};

struct ConstructionSize {
    std::string engine;
    std::uint64_t size = 0;
};

struct BoundsReport {
    int n = 0, r = 0, t = 0, s = 0;
    LowerBounds lower;                          // asymptotic-labeled
    std::optional<Rational> upper_r2_exact;     // (s-1 capped) * 2^n / n, exact for r = 2
    std::vector<PrimePowerUpperBound> upper_prime_power; // i in 0..10, asymptotic
    std::optional<int> prime_power_min_i;       // i minimizing the coefficient
    std::vector<TransferBound> transfer;        // exact finite-n upper bounds
    std::vector<ConstructionSize> constructed;  // exact finite-n lower bounds
    std::optional<std::uint64_t> exact_alpha;
};

// Fills in formula bounds; transfer/constructed/exact are supplied by the
// caller. Throws std::logic_error when exact quantities are ordered
// inconsistently (a construction beating an exact value or an exact
// transfer bound indicates an implementation bug).
BoundsReport assemble_report(int n, int r, int s,
                             const std::vector<TransferBound>& transfer,
                             const std::vector<ConstructionSize>& constructed,
                             std::optional<std::uint64_t> exact_alpha);

} // namespace hkfree
