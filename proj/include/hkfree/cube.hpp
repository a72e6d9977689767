#pragma once

// The Boolean cube {0,1}^n and its distance-r graphs H_r(n).
// Vertices are n-bit integers; coordinate i (1-based) is bit i-1.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hkfree {

using Vertex = std::uint64_t;

// thrown when a search or scan would blow a budget cap; never a wrong answer
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline int weight(Vertex x) { return std::popcount(x); }

constexpr int kEnumerationCap = 30; // whole-cube walks stop here

struct CubeParams {
    int n = 0;
    int r = 0;
    int t = 0; // r/2, meaningful for even r
    int s = 2;

    // Validates n >= 1, s >= 2 and (unless allow_odd_r) even r >= 2.
    static CubeParams make(int n, int r, int s = 2, bool allow_odd_r = false);
};

int hamming_distance_checked(Vertex x, Vertex y, int n); // throws on out-of-range
inline int hamming_distance(Vertex x, Vertex y) { return std::popcount(x ^ y); }
bool are_adjacent(Vertex x, Vertex y, const CubeParams& params);

// All C(n,r) vertices at distance exactly r from x, ascending encoded value.
std::vector<Vertex> neighbors_at_distance_r(Vertex x, const CubeParams& params);

// All weight-k masks of n bits, ascending (used for layers and flip masks).
std::vector<Vertex> masks_of_weight(int n, int k);

// {x ^ u : x in set}; XOR translation is a Hamming isometry.
std::vector<Vertex> translate(const std::vector<Vertex>& set, Vertex u, int n);

// Fixed-width lowercase hex of the n-bit value, most significant nibble first.
std::string vertex_to_hex(Vertex x, int n);
Vertex vertex_from_hex(const std::string& text, int n); // throws on malformed input

// The k-th layer L_k as a set family (weight-k masks of [n]).
struct LayerSet {
    int n = 0;
    int k = 0;
    std::vector<Vertex> members;

    static LayerSet full_layer(int n, int k);
};

// A vertex set plus the certificate it carries.
enum class CertKind { independent, ks_free, unverified };

struct CertifiedSet {
    CubeParams params;
    std::vector<Vertex> vertices; // kept sorted ascending
    CertKind kind = CertKind::unverified;
    bool verified = false; // true once an exhaustive scan has confirmed the kind
    std::string method;
};

const char* cert_kind_name(CertKind kind);

} // namespace hkfree
