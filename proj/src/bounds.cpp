#include "hkfree/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "hkfree/field.hpp"

namespace hkfree {

std::optional<PrimePowerUpperBound> eval_prime_power_upper(int n, int t, int i) {
    if (i < 0) throw std::invalid_argument("prime power bound: i must be >= 0");
    if (!is_prime_power((std::uint64_t)(t + i))) return std::nullopt;
    PrimePowerUpperBound out;
    out.i = i;
    int128 coeff = 1;
    for (int j = t + i; j <= 2 * t - 1 + i; ++j) coeff = checked_mul(coeff, j);
    out.coefficient = Rational(coeff);
    out.value = Rational(checked_mul(coeff, pow2_int128(n)), ipow_int128(n, t));
    return out;
}

int128 eval_frankl_wilson(int n, std::uint64_t q) {
    if (!is_prime_power(q)) throw std::invalid_argument("frankl-wilson: q must be a prime power");
    return binomial(n, (int)q - 1);
}

LowerBounds eval_lower_bounds(int n, int t, int s) {
    if (n < 1 || t < 1 || s < 2) throw std::invalid_argument("lower bounds: bad parameters");
    LowerBounds lb;
    Rational base(pow2_int128(n), ipow_int128(n, t));
    lb.leading_general = Rational(s - 1, t + 1) * base;
    lb.leading_subsequence = Rational(s - 1) * base;
    int m = 0;
    while ((1ll << m) <= n) ++m; // smallest power of two strictly above n, so k >= 1
    lb.subseq_m = m;
    lb.subseq_k = (int)((1ll << m) - n);
    return lb;
}

BoundsReport assemble_report(int n, int r, int s,
                             const std::vector<TransferBound>& transfer,
                             const std::vector<ConstructionSize>& constructed,
                             std::optional<std::uint64_t> exact_alpha) {
    if (r % 2 != 0 || r < 2) throw std::invalid_argument("report: r must be even and >= 2");
    BoundsReport rep;
    rep.n = n;
    rep.r = r;
    rep.t = r / 2;
    rep.s = s;
    rep.lower = eval_lower_bounds(n, rep.t, s);
    if (r == 2) {
        // k = 1 transfer with m_s(n,1,0) = min(s-1, n): exact at finite n
        int128 m1 = std::min<int128>(s - 1, n);
        rep.upper_r2_exact = Rational(checked_mul(m1, pow2_int128(n)), n);
    }
    for (int i = 0; i <= 10; ++i)
        if (auto b = eval_prime_power_upper(n, rep.t, i)) {
            if (!rep.prime_power_min_i ||
                b->coefficient < rep.upper_prime_power[*rep.prime_power_min_i].coefficient)
                rep.prime_power_min_i = (int)rep.upper_prime_power.size();
            rep.upper_prime_power.push_back(*b);
        }
    rep.transfer = transfer;
    rep.constructed = constructed;
    rep.exact_alpha = exact_alpha;

    // hard ordering among exact quantities only
    std::optional<Rational> min_upper;
    for (const auto& tb : transfer)
        if (!min_upper || tb.bound < *min_upper) min_upper = tb.bound;
    if (rep.upper_r2_exact && (!min_upper || *rep.upper_r2_exact < *min_upper))
        min_upper = rep.upper_r2_exact;
    for (const auto& c : constructed) {
        if (exact_alpha && c.size > *exact_alpha)
            throw std::logic_error("report: construction exceeds exact alpha_s");
        if (min_upper && Rational((int128)c.size) > *min_upper)
            throw std::logic_error("report: construction exceeds an exact upper bound");
    }
    if (exact_alpha && min_upper && Rational((int128)*exact_alpha) > *min_upper)
        throw std::logic_error("report: exact alpha_s exceeds an exact upper bound");
    return rep;
}

} // namespace hkfree
