#include "hkfree/field.hpp"

#include <stdexcept>
#include <string>

namespace hkfree {

namespace {

// least irreducible polynomial of each degree 1..16, verified at startup
constexpr std::uint32_t kModulusTable[17] = {
    0,      0x2,    0x7,    0xb,    0x13,   0x25,   0x43,   0x83,
    0x11b,  0x203,  0x409,  0x805,  0x1009, 0x201b, 0x4021, 0x8003,
    0x1002b,
};

int poly_degree(std::uint32_t p) {
    if (p == 0) return -1;
    int d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    int db = poly_degree(b);
    while (poly_degree(a) >= db) a ^= b << (poly_degree(a) - db);
    return a;
}

} // namespace

bool poly_irreducible(std::uint32_t poly) {
    int d = poly_degree(poly);
    if (d <= 0) return false;
    for (int dd = 1; dd <= d / 2; ++dd)
        for (std::uint32_t q = 1u << dd; q < (2u << dd); ++q)
            if (poly_mod(poly, q) == 0) return false;
    return true;
}

std::uint32_t shipped_modulus(int m) {
    if (m < 1 || m > 16) throw std::invalid_argument("GF(2^m): m must be in 1..16");
    return kModulusTable[m];
}

FieldTable::FieldTable(int m) : FieldTable(m, shipped_modulus(m)) {}

FieldTable::FieldTable(int m, std::uint32_t modulus)
    : m_(m), modulus_(modulus), order_(1u << m) {
    if (m < 1 || m > 16) throw std::invalid_argument("GF(2^m): m must be in 1..16");
    if (poly_degree(modulus) != m)
        throw std::invalid_argument("GF(2^m): modulus degree != m");
    if (!poly_irreducible(modulus))
        throw std::invalid_argument("GF(2^m): modulus is reducible");
    // gamma_1 = 0, remaining elements in ascending code order
    labeling_.resize(order_);
    for (std::uint32_t i = 0; i < order_; ++i) labeling_[i] = i;
}

gf_elem FieldTable::label(std::uint32_t i) const {
    if (i < 1 || i > order_) throw std::out_of_range("label index outside 1..N");
    return labeling_[i - 1];
}

void FieldTable::check(gf_elem a) const {
    if (a >= order_) throw std::out_of_range("GF(2^m): element code out of range");
}

gf_elem FieldTable::add(gf_elem a, gf_elem b) const {
    check(a);
    check(b);
    return a ^ b;
}

gf_elem FieldTable::mul(gf_elem a, gf_elem b) const {
    check(a);
    check(b);
    std::uint32_t r = 0;
    while (b) {
        if (b & 1) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m_ & 1) a ^= modulus_;
    }
    return r;
}

gf_elem FieldTable::pow(gf_elem a, std::uint64_t j) const {
    check(a);
    gf_elem r = 1;
    while (j) {
        if (j & 1) r = mul(r, a);
        a = mul(a, a);
        j >>= 1;
    }
    return r;
}

gf_elem FieldTable::inverse(gf_elem a) const {
    check(a);
    if (a == 0) throw std::domain_error("GF(2^m): zero has no inverse");
    return pow(a, order_ - 2);
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) throw std::invalid_argument("GF(q): modulus " + std::to_string(q) + " is not prime");
}

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

std::uint64_t next_prime(std::uint64_t x) {
    if (x < 2) x = 2;
    if (x > 1000000) throw std::invalid_argument("next_prime: argument above desk scale (10^6)");
    while (!is_prime(x)) ++x;
    return x;
}

std::optional<PrimePowerWitness> is_prime_power(std::uint64_t x) {
    if (x < 2) return std::nullopt;
    std::uint64_t p = 0, rest = x;
    for (std::uint64_t d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return PrimePowerWitness{x, 1};
    unsigned e = 0;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) return std::nullopt;
    return PrimePowerWitness{p, e};
}

} // namespace hkfree
