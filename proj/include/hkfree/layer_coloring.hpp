#pragma once

// Layer-by-layer coloring of H_{2t}(n):
//  - each layer L_k is colored by the first t elementary symmetric polynomials
//    of the support over GF(q), q = next_prime(n), giving <= q^t classes per
//    layer in which distinct sets differ in >= 2t+2 coordinates;
//  - layers are grouped into t+1 classes so grouped layers are never joined
//    by an H_{2t}(n) edge; the product coloring is proper with <= (t+1)*q^t classes.

#include <cstdint>
#include <vector>

#include "hkfree/cube.hpp"
#include "hkfree/field.hpp"

namespace hkfree {

// Residues (sigma_1, ..., sigma_t) mod q of the support.
using LayerFingerprint = std::vector<std::uint64_t>;

struct LayerPartition {
    int n = 0;
    int t = 0;
    std::vector<std::vector<int>> classes; // t+1 classes covering {0..n}

    int class_of(int k) const; // index in 0..t
};

// S_{i} = union over k = 2i (mod 2t+2) of {k, k+1}, intersected with {0..n}.
LayerPartition build_layer_partition(int n, int t);

// Elementary symmetric polynomials sigma_1..sigma_t of {i-1 : i in A} mod q.
// A is a subset of [n] encoded as a bitmask; requires prime q >= n.
LayerFingerprint gs_layer_color(Vertex A, int n, int t, const PrimeField& field);

// Packed fingerprint in base q (layer-local color identity).
std::uint64_t pack_fingerprint(const LayerFingerprint& fp, std::uint64_t q);

// True iff every two distinct equal-fingerprint k-sets differ in >= 2(t+1)
// coordinates. Enumerates all C(n,k) sets; budget-capped by max_sets.
bool verify_layer_class_distance(int n, int k, int t, std::uint64_t q,
                                 std::uint64_t max_sets = 1000000);

// Streaming form of the assembled coloring: packed (layer class, fingerprint)
// values, cheap per vertex, no materialized table.
class LayerColorValue {
public:
    explicit LayerColorValue(const CubeParams& params);
    std::uint64_t operator()(Vertex x) const;
    std::uint64_t q() const { return field_.modulus(); }
    std::uint64_t capacity() const { return (std::uint64_t)(params_.t + 1) * qt_; }

private:
    CubeParams params_;
    LayerPartition partition_;
    PrimeField field_;
    std::uint64_t qt_;
};

struct CubeLayerColoring {
    CubeParams params;
    std::uint64_t q = 0;
    LayerPartition partition;
    std::uint64_t capacity = 0;          // (t+1) * q^t
    std::vector<std::uint32_t> color_of; // dense color index per vertex
    std::vector<std::uint64_t> class_size;

    std::uint32_t num_classes() const { return (std::uint32_t)class_size.size(); }
};

// color(x) = (layer class of |x|, fingerprint of the support of x),
// densely re-indexed in first-seen order over ascending vertices.
CubeLayerColoring build_cube_coloring(const CubeParams& params);

// Union of the s-1 largest classes of any materialized coloring
// (ties broken toward the earlier dense index). K_s-free by pigeonhole.
CertifiedSet ks_free_from_classes(const CubeParams& params,
                                  const std::vector<std::uint32_t>& color_of,
                                  const std::vector<std::uint64_t>& class_size,
                                  int s, const char* method);

} // namespace hkfree
