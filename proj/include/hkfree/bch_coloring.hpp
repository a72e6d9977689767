#pragma once

// Fiber coloring of {0,1}^n by the odd power sums over GF(2^m):
//   Phi(x) = (S_1(x), S_3(x), ..., S_{2t-1}(x)),  S_j(x) = sum of gamma_i^j over set coordinates.
// Fibers of Phi are cosets of a distance-(2t+1) linear code, so they color
// H_{2t}(n) properly with at most 2^{t*ceil(log2 n)} classes.

#include <cstdint>
#include <vector>

#include "hkfree/cube.hpp"
#include "hkfree/field.hpp"

namespace hkfree {

// Values (S_1, S_3, ..., S_{2t-1}); components are field codes.
using PowerSumVector = std::vector<gf_elem>;

struct FiberColoring {
    CubeParams params;
    int m = 0;                           // field degree, ceil(log2 n) (min 1)
    std::uint32_t capacity = 0;          // 2^{t*m}, the class-count bound
    std::vector<std::uint32_t> color_of; // dense color index per vertex, 2^n entries
    std::vector<std::uint64_t> class_value; // packed power-sum vector per dense color
    std::vector<std::uint64_t> class_size;

    std::uint32_t num_classes() const { return (std::uint32_t)class_size.size(); }
};

// Field degree used for dimension n: smallest m with 2^m >= n (at least 1).
int fiber_field_degree(int n);

// The n-cube sits inside the N-cube with every non-free coordinate zero.
// For n < N the zero-labeled coordinate 1 is among the zeroed ones (the free
// coordinates are 2..n+1), so distinct same-fiber vertices differ in >= 2t+1
// coordinates; at n = N every coordinate is free.
Vertex embed_vertex(Vertex x, int n, std::uint32_t N);

// S_1, S_3, ..., S_{2t-1} of an N-coordinate vector, coordinate i carrying gamma_i.
PowerSumVector power_sums(Vertex x_embedded, const FieldTable& field, int t);

// Power sums packed little-endian, m bits per component (color identity).
std::uint64_t pack_power_sums(const PowerSumVector& sums, int m);

// Packed Phi of the embedded x; cheap enough to stream over vertex ranges.
std::uint64_t fiber_color_value(Vertex x, int n, const FieldTable& field, int t);

// Enumerates {0,1}^n, assigning dense color indices in first-seen order.
FiberColoring build_fiber_coloring(const CubeParams& params);

// Minimum weight of the BCH-style kernel of Phi on F_2^N: the minimum over
// nonzero kernel words with support off the zero-labeled coordinate
// (equivalently, over kernel words of weight >= 2; the zero label makes its
// own coordinate invisible to Phi, so the singleton word on it is excluded).
// Must come out >= 2t+1.
int kernel_min_weight(const FieldTable& field, int t);

// The fiber of the given dense color as a certified independent set.
CertifiedSet independent_set_from_fiber(const FiberColoring& coloring, std::uint32_t color);

} // namespace hkfree
