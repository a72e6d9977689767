#pragma once

// Exhaustive ground truth at desk scale: exact alpha_s(H_r(n)), exact
// m_s(n,k,l), K_s detection, and sunflower detection. Searches abort
// cleanly when a budget trips; they never return a wrong value.

#include <cstdint>
#include <optional>
#include <vector>

#include "hkfree/cube.hpp"
#include "hkfree/rational.hpp"

namespace hkfree {

struct SearchBudget {
    std::uint64_t max_vertices = 1 << 13;      // search universe cap
    std::uint64_t max_pairs = 100000000;       // pairwise scans cap
    std::uint64_t max_nodes = 50000000;        // branch-and-bound node cap
    std::uint64_t canonical_nodes = 20000000;  // extra budget for witness canonicalization
    double time_cap_seconds = 0;               // 0 disables; tripping it flags inexact
};

struct SearchResult {
    std::uint64_t value = 0;
    std::vector<Vertex> witness; // sorted ascending
    bool exact = false;          // false once a budget tripped; value is then a lower bound
    std::uint64_t nodes = 0;
    bool canonical = false;      // witness is the lexicographically least optimum
};

// Exact alpha_s(H_r(n)) with witness. Splits into connected components,
// dedups XOR-translate-identical components, and proves each piece by
// branch and bound. Odd r with s >= 3 takes the bipartite shortcut.
SearchResult max_ks_free(const CubeParams& params, const SearchBudget& budget,
                         bool canonical_witness = false);

// Exact m_s(n,k,l): largest k-uniform family on [n] with no s members
// pairwise intersecting in exactly l elements. Witness entries are set masks.
SearchResult m_s_exact(int n, int k, int l, int s, const SearchBudget& budget,
                       bool canonical_witness = false);

// alpha_s of the subgraph of H_{2t}(n) induced on layer k (dual route to
// m_s_exact(n, k, k-t); the two must agree).
SearchResult alpha_layer(int n, int k, int t, int s, const SearchBudget& budget);

// Some s vertices of the set pairwise at distance exactly r? Returns the
// clique if found. Throws when the pair scan exceeds max_pairs.
std::optional<std::vector<Vertex>> contains_ks(const std::vector<Vertex>& set,
                                               const CubeParams& params, int s,
                                               std::uint64_t max_pairs = 100000000);

struct SunflowerSpec {
    int k = 0; // uniformity
    int l = 0; // kernel size, 0 <= l <= k-1
    int s = 2; // petal count
};

// A sunflower with s petals and kernel of size exactly l inside the family,
// if one exists. Members of the returned witness are family masks.
std::optional<std::vector<Vertex>> find_sunflower(const LayerSet& family,
                                                  const SunflowerSpec& spec,
                                                  std::uint64_t max_pairs = 100000000);

// Averaging transfer: alpha_s(H_{2t}(n)) <= 2^n * m_s(n,k,k-t) / C(n,k).
Rational transfer_upper_bound(int n, int k, int t, int s, std::uint64_t m_value);

} // namespace hkfree
