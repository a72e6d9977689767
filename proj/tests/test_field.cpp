#include "doctest.h"

#include <cstdint>
#include <vector>

#include "hkfree/field.hpp"

using namespace hkfree;

TEST_CASE("shipped moduli are irreducible of the right degree") {
    for (int m = 1; m <= 16; ++m) {
        std::uint32_t p = shipped_modulus(m);
        CHECK(poly_irreducible(p));
        CHECK((p >> m) == 1u); // degree exactly m
        FieldTable f(m);     // constructor re-verifies
        CHECK(f.order() == 1u << m);
        CHECK(f.label(1) == 0); // gamma_1 encodes zero
    }
}

TEST_CASE("GF(4) hand values under x^2+x+1") {
    FieldTable f(2);
    CHECK(f.modulus() == 0x7);
    CHECK(f.add(2, 1) == 3);     // alpha + 1
    CHECK(f.mul(2, 2) == 3);     // alpha^2 = alpha + 1 by long division
    CHECK(f.pow(2, 3) == 1);     // alpha^3 = 1
    CHECK(f.pow(2, 0) == 1);
    CHECK(f.pow(0, 0) == 1);     // 0^0 defined as 1
}

TEST_CASE("add is self-inverse with identity 0, mul identity 1") {
    FieldTable f(3);
    for (gf_elem a = 0; a < f.order(); ++a) {
        CHECK(f.add(a, a) == 0);
        CHECK(f.add(a, 0) == a);
        CHECK(f.mul(a, 1) == a);
    }
}

TEST_CASE("multiplicative group of GF(8) has order 7") {
    FieldTable f(3);
    for (gf_elem a = 1; a < f.order(); ++a) CHECK(f.pow(a, 7) == 1);
}

TEST_CASE("field axioms exhaustively for m <= 4") {
    for (int m = 1; m <= 4; ++m) {
        FieldTable f(m);
        std::uint32_t N = f.order();
        for (gf_elem a = 0; a < N; ++a)
            for (gf_elem b = 0; b < N; ++b)
                for (gf_elem c = 0; c < N; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
        for (gf_elem a = 1; a < N; ++a) {
            bool has_inverse = false;
            for (gf_elem b = 1; b < N; ++b)
                if (f.mul(a, b) == 1) has_inverse = true;
            CHECK(has_inverse);
            CHECK(f.mul(a, f.inverse(a)) == 1);
        }
    }
}

TEST_CASE("Frobenius: (u+v)^2 = u^2 + v^2 for m <= 8") {
    for (int m = 1; m <= 8; ++m) {
        FieldTable f(m);
        std::uint32_t N = f.order();
        for (gf_elem u = 0; u < N; ++u)
            for (gf_elem v = 0; v < N; ++v) {
                gf_elem lhs = f.mul(f.add(u, v), f.add(u, v));
                gf_elem rhs = f.add(f.mul(u, u), f.mul(v, v));
                if (lhs != rhs) {
                    CHECK(lhs == rhs);
                    return;
                }
            }
    }
    CHECK(true);
}

namespace {

// exact determinant over the field by Gaussian elimination
gf_elem field_det(const FieldTable& f, std::vector<std::vector<gf_elem>> M) {
    std::size_t w = M.size();
    gf_elem det = 1;
    for (std::size_t c = 0; c < w; ++c) {
        std::size_t piv = c;
        while (piv < w && M[piv][c] == 0) ++piv;
        if (piv == w) return 0;
        std::swap(M[c], M[piv]); // char 2: no sign to track
        det = f.mul(det, M[c][c]);
        gf_elem inv = f.inverse(M[c][c]);
        for (std::size_t r = c + 1; r < w; ++r) {
            if (M[r][c] == 0) continue;
            gf_elem factor = f.mul(M[r][c], inv);
            for (std::size_t cc = c; cc < w; ++cc)
                M[r][cc] = f.add(M[r][cc], f.mul(factor, M[c][cc]));
        }
    }
    return det;
}

} // namespace

TEST_CASE("Vandermonde-with-column-scaling matrices are invertible") {
    // [beta_s^l] for l = 1..w, distinct nonzero beta's; det = prod(beta) * prod(beta_j - beta_i)
    for (int m : {3, 4}) {
        FieldTable f(m);
        std::uint32_t N = f.order();
        std::vector<gf_elem> nonzero;
        for (gf_elem a = 1; a < N; ++a) nonzero.push_back(a);
        for (int w = 1; w <= 6; ++w) {
            // all w-subsets of nonzero elements
            std::vector<int> idx(w);
            for (int i = 0; i < w; ++i) idx[i] = i;
            for (;;) {
                std::vector<gf_elem> beta(w);
                for (int i = 0; i < w; ++i) beta[i] = nonzero[idx[i]];
                std::vector<std::vector<gf_elem>> M(w, std::vector<gf_elem>(w));
                for (int l = 1; l <= w; ++l)
                    for (int s = 0; s < w; ++s) M[l - 1][s] = f.pow(beta[s], l);
                gf_elem det = field_det(f, M);
                REQUIRE(det != 0);
                // dual route: det = prod(beta_s) * prod_{i<j}(beta_j + beta_i)
                gf_elem expected = 1;
                for (int i = 0; i < w; ++i) expected = f.mul(expected, beta[i]);
                for (int i = 0; i < w; ++i)
                    for (int j = i + 1; j < w; ++j)
                        expected = f.mul(expected, f.add(beta[j], beta[i]));
                REQUIRE(det == expected);
                // next combination
                int pos = w - 1;
                while (pos >= 0 && idx[pos] == (int)nonzero.size() - w + pos) --pos;
                if (pos < 0) break;
                ++idx[pos];
                for (int i = pos + 1; i < w; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
    }
}

TEST_CASE("next_prime by trial division") {
    CHECK(next_prime(2) == 2);
    CHECK(next_prime(16) == 17);
    CHECK(next_prime(20) == 23);
    CHECK(next_prime(7) == 7);
    CHECK(next_prime(1) == 2);
    CHECK_THROWS(next_prime(2000000));
}

TEST_CASE("is_prime_power with witness") {
    auto w8 = is_prime_power(8);
    REQUIRE(w8.has_value());
    CHECK(w8->p == 2);
    CHECK(w8->e == 3);
    CHECK_FALSE(is_prime_power(1).has_value());
    CHECK_FALSE(is_prime_power(6).has_value());
    CHECK_FALSE(is_prime_power(0).has_value());
    auto w7 = is_prime_power(7);
    REQUIRE(w7.has_value());
    CHECK(w7->p == 7);
    CHECK(w7->e == 1);
    auto w49 = is_prime_power(49);
    REQUIRE(w49.has_value());
    CHECK(w49->p == 7);
    CHECK(w49->e == 2);
}

TEST_CASE("prime field rejects composites, arithmetic wraps") {
    CHECK_THROWS(PrimeField(6));
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.mul(5, 4) == 6);
}

TEST_CASE("element code range errors") {
    FieldTable f(2);
    CHECK_THROWS(f.add(4, 0));
    CHECK_THROWS(f.mul(0, 4));
    CHECK_THROWS(f.pow(7, 2));
}
