#include "hkfree/bch_coloring.hpp"

#include <bit>
#include <stdexcept>
#include <unordered_map>

#include "hkfree/parallel.hpp"

namespace hkfree {

int fiber_field_degree(int n) {
    if (n < 1) throw std::invalid_argument("fiber coloring: n must be >= 1");
    int m = 1;
    while ((1 << m) < n) ++m;
    return m;
}

Vertex embed_vertex(Vertex x, int n, std::uint32_t N) {
    if (n > (int)N) throw std::invalid_argument("embed_vertex: n exceeds field order");
    if (x >> n) throw std::invalid_argument("embed_vertex: vertex outside {0,1}^n");
    return n < (int)N ? x << 1 : x;
}

PowerSumVector power_sums(Vertex x, const FieldTable& field, int t) {
    std::uint32_t N = field.order();
    if (N < 64 && (x >> N))
        throw std::invalid_argument("power_sums: vector outside {0,1}^N");
    PowerSumVector sums(t, 0);
    Vertex rest = x;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        gf_elem gamma = field.label((std::uint32_t)b + 1);
        // gamma^1, gamma^3, ... via one running gamma^2 step
        gf_elem g2 = field.mul(gamma, gamma);
        gf_elem p = gamma;
        for (int l = 0; l < t; ++l) {
            sums[l] = field.add(sums[l], p);
            p = field.mul(p, g2);
        }
    }
    return sums;
}

std::uint64_t pack_power_sums(const PowerSumVector& sums, int m) {
    std::uint64_t packed = 0;
    for (std::size_t l = 0; l < sums.size(); ++l)
        packed |= (std::uint64_t)sums[l] << (m * (int)l);
    return packed;
}

std::uint64_t fiber_color_value(Vertex x, int n, const FieldTable& field, int t) {
    return pack_power_sums(power_sums(embed_vertex(x, n, field.order()), field, t), field.degree());
}

FiberColoring build_fiber_coloring(const CubeParams& params) {
    if (params.n > kEnumerationCap)
        throw std::invalid_argument("fiber coloring: n above enumeration cap");
    if (params.n > 26)
        throw std::invalid_argument(
            "fiber coloring: n too large to materialize; stream fiber_color_value instead");
    int m = fiber_field_degree(params.n);
    if (m * params.t > 60)
        throw std::invalid_argument("fiber coloring: t*m too large to pack");
    FieldTable field(m);

    FiberColoring fc;
    fc.params = params;
    fc.m = m;
    fc.capacity = (std::uint32_t)1 << (std::uint32_t)(params.t * m);
    std::uint64_t total = std::uint64_t{1} << params.n;
    fc.color_of.resize(total);

    // packed color values, computed in parallel then indexed in vertex order
    std::vector<std::uint64_t> value_of(total);
    parallel_chunks(total, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x)
            value_of[x] = fiber_color_value(x, params.n, field, params.t);
    });

    std::unordered_map<std::uint64_t, std::uint32_t> dense;
    dense.reserve(fc.capacity * 2);
    for (std::uint64_t x = 0; x < total; ++x) {
        auto [it, inserted] = dense.try_emplace(value_of[x], (std::uint32_t)fc.class_value.size());
        if (inserted) {
            fc.class_value.push_back(value_of[x]);
            fc.class_size.push_back(0);
        }
        fc.color_of[x] = it->second;
        fc.class_size[it->second]++;
    }
    return fc;
}

int kernel_min_weight(const FieldTable& field, int t) {
    const std::uint32_t N = field.order();
    const int m = field.degree();
    if (N > 64) throw std::invalid_argument("kernel_min_weight: N > 64");
    const int rows_max = t * m;

    // F_2 matrix of Phi: row (l,b) is bit b of S_{2l-1}(e_i) over columns i
    std::vector<std::uint64_t> rows(rows_max, 0);
    for (std::uint32_t col = 0; col < N; ++col) {
        gf_elem gamma = field.label(col + 1);
        gf_elem g2 = field.mul(gamma, gamma);
        gf_elem p = gamma;
        for (int l = 0; l < t; ++l) {
            for (int b = 0; b < m; ++b)
                if (p >> b & 1) rows[l * m + b] |= std::uint64_t{1} << col;
            p = field.mul(p, g2);
        }
    }

    // row-reduce; read off a nullspace basis from the free columns
    std::vector<int> pivot_col;
    int rank = 0;
    for (std::uint32_t c = 0; c < N && rank < rows_max; ++c) {
        int pr = -1;
        for (int r = rank; r < rows_max; ++r)
            if (rows[r] >> c & 1) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(rows[rank], rows[pr]);
        for (int r = 0; r < rows_max; ++r)
            if (r != rank && (rows[r] >> c & 1)) rows[r] ^= rows[rank];
        pivot_col.push_back((int)c);
        ++rank;
    }
    std::vector<std::uint64_t> basis;
    {
        std::vector<char> is_pivot(N, 0);
        for (int c : pivot_col) is_pivot[c] = 1;
        for (std::uint32_t c = 0; c < N; ++c) {
            if (is_pivot[c]) continue;
            std::uint64_t y = std::uint64_t{1} << c;
            for (int r = 0; r < rank; ++r)
                if (rows[r] >> c & 1) y |= std::uint64_t{1} << pivot_col[r];
            basis.push_back(y);
        }
    }
    int dim = (int)basis.size();
    if (dim > 26) throw std::invalid_argument("kernel_min_weight: kernel too large to enumerate");

    int min_w = (int)N + 1;
    // Gray-code walk over all 2^dim combinations
    std::uint64_t y = 0;
    for (std::uint64_t g = 1; g < (std::uint64_t{1} << dim); ++g) {
        y ^= basis[std::countr_zero(g)];
        int w = std::popcount(y);
        if (w >= 2 && w < min_w) min_w = w;
    }
    if (min_w > (int)N) throw std::logic_error("kernel_min_weight: kernel has no word of weight >= 2");
    if (min_w < 2 * t + 1) throw std::logic_error("kernel_min_weight: BCH distance violated");
    return min_w;
}

CertifiedSet independent_set_from_fiber(const FiberColoring& coloring, std::uint32_t color) {
    if (color >= coloring.num_classes())
        throw std::out_of_range("independent_set_from_fiber: unknown color");
    CertifiedSet set;
    set.params = coloring.params;
    set.params.s = 2;
    set.vertices.reserve(coloring.class_size[color]);
    for (std::uint64_t x = 0; x < (std::uint64_t)coloring.color_of.size(); ++x)
        if (coloring.color_of[x] == color) set.vertices.push_back(x);
    set.kind = CertKind::independent;
    set.verified = false; // guaranteed by construction; re-verification upgrades this
    set.method = "bch_fiber";
    return set;
}

} // namespace hkfree
