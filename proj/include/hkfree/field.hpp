#pragma once

// Exact arithmetic in GF(2^m) (m <= 16) and in prime fields GF(q),
// plus the small number-theory helpers the colorings need.

#include <cstdint>
#include <optional>
#include <vector>

namespace hkfree {

using gf_elem = std::uint32_t; // element code: bits are polynomial coefficients

// GF(2^m) under a fixed irreducible modulus. Element codes are the integers
// 0 .. 2^m - 1. The labeling gamma_1..gamma_N maps 1-based indices to codes
// with gamma_1 = 0 and the rest in ascending code order.
class FieldTable {
public:
    // Uses the shipped modulus for this degree (least irreducible polynomial
    // of degree m, re-verified by trial division). Throws on m outside 1..16.
    explicit FieldTable(int m);
    FieldTable(int m, std::uint32_t modulus); // custom modulus, verified

    int degree() const { return m_; }
    std::uint32_t order() const { return order_; }      // N = 2^m
    std::uint32_t modulus() const { return modulus_; }

    // gamma_i for 1-based i in 1..N
    gf_elem label(std::uint32_t i) const;

    gf_elem add(gf_elem a, gf_elem b) const;             // XOR of codes
    gf_elem mul(gf_elem a, gf_elem b) const;             // product mod modulus
    gf_elem pow(gf_elem a, std::uint64_t j) const;       // 0^0 = 1
    gf_elem inverse(gf_elem a) const;                    // a != 0

private:
    void check(gf_elem a) const;
    int m_;
    std::uint32_t modulus_;
    std::uint32_t order_;
    std::vector<gf_elem> labeling_;
};

// Shipped modulus table, degrees 1..16.
std::uint32_t shipped_modulus(int m);

// Irreducibility over GF(2) by trial division against all lower-degree
// polynomials. poly is a bitmask, degree = position of the top bit.
bool poly_irreducible(std::uint32_t poly);

// Prime field GF(q) with canonical residues 0..q-1. q certified prime
// on construction.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q);
    std::uint64_t modulus() const { return q_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return (a * b) % q_; }

private:
    std::uint64_t q_;
};

bool is_prime(std::uint64_t x);

// Smallest prime >= x. x must be >= 2 and within desk scale (<= 10^6).
std::uint64_t next_prime(std::uint64_t x);

struct PrimePowerWitness {
    std::uint64_t p;
    unsigned e;
};

// x = p^e with p prime, e >= 1. 1 is not a prime power.
std::optional<PrimePowerWitness> is_prime_power(std::uint64_t x);

} // namespace hkfree
