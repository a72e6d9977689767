#include "hkfree/layer_coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hkfree/parallel.hpp"

namespace hkfree {

int LayerPartition::class_of(int k) const {
    if (k < 0 || k > n) throw std::out_of_range("layer partition: k outside 0..n");
    return (k % (2 * t + 2)) / 2;
}

LayerPartition build_layer_partition(int n, int t) {
    if (n < 1 || t < 1) throw std::invalid_argument("layer partition: need n >= 1, t >= 1");
    LayerPartition p;
    p.n = n;
    p.t = t;
    p.classes.resize(t + 1);
    for (int k = 0; k <= n; ++k) p.classes[p.class_of(k)].push_back(k);
    return p;
}

LayerFingerprint gs_layer_color(Vertex A, int n, int t, const PrimeField& field) {
    std::uint64_t q = field.modulus();
    if (q < (std::uint64_t)n)
        throw std::invalid_argument("layer color: q < n, coordinate labels not injective");
    if (A >> n) throw std::invalid_argument("layer color: set outside [n]");
    // e_j update: e_j += a * e_{j-1}, one pass per support element
    std::vector<std::uint64_t> e(t + 1, 0);
    e[0] = 1;
    Vertex rest = A;
    while (rest) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t a = (std::uint64_t)b % q;
        for (int j = t; j >= 1; --j) e[j] = field.add(e[j], field.mul(a, e[j - 1]));
    }
    return LayerFingerprint(e.begin() + 1, e.end());
}

std::uint64_t pack_fingerprint(const LayerFingerprint& fp, std::uint64_t q) {
    std::uint64_t packed = 0;
    for (std::size_t i = fp.size(); i-- > 0;) packed = packed * q + fp[i];
    return packed;
}

bool verify_layer_class_distance(int n, int k, int t, std::uint64_t q, std::uint64_t max_sets) {
    PrimeField field(q);
    auto sets = masks_of_weight(n, k);
    if (sets.size() > max_sets)
        throw BudgetError("verify_layer_class_distance: layer too large");
    std::unordered_map<std::uint64_t, std::vector<Vertex>> classes;
    for (Vertex A : sets)
        classes[pack_fingerprint(gs_layer_color(A, n, t, field), q)].push_back(A);
    for (const auto& [value, members] : classes) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (std::popcount(members[i] ^ members[j]) < 2 * (t + 1)) return false;
    }
    return true;
}

LayerColorValue::LayerColorValue(const CubeParams& params)
    : params_(params),
      partition_(build_layer_partition(params.n, params.t)),
      field_(next_prime((std::uint64_t)params.n)),
      qt_(1) {
    for (int l = 0; l < params_.t; ++l) qt_ *= field_.modulus();
}

std::uint64_t LayerColorValue::operator()(Vertex x) const {
    int cls = partition_.class_of(std::popcount(x));
    std::uint64_t fp =
        pack_fingerprint(gs_layer_color(x, params_.n, params_.t, field_), field_.modulus());
    return (std::uint64_t)cls * qt_ + fp;
}

CubeLayerColoring build_cube_coloring(const CubeParams& params) {
    if (params.n > kEnumerationCap)
        throw std::invalid_argument("cube coloring: n above enumeration cap");
    if (params.n > 26)
        throw std::invalid_argument(
            "cube coloring: n too large to materialize; stream LayerColorValue instead");
    CubeLayerColoring cc;
    cc.params = params;
    LayerColorValue value(params);
    cc.q = value.q();
    cc.partition = build_layer_partition(params.n, params.t);
    cc.capacity = value.capacity();

    std::uint64_t total = std::uint64_t{1} << params.n;
    cc.color_of.resize(total);
    std::vector<std::uint64_t> value_of(total);
    parallel_chunks(total, [&](unsigned, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) value_of[x] = value(x);
    });

    std::unordered_map<std::uint64_t, std::uint32_t> dense;
    std::vector<std::uint64_t> sizes;
    for (std::uint64_t x = 0; x < total; ++x) {
        auto [it, inserted] = dense.try_emplace(value_of[x], (std::uint32_t)sizes.size());
        if (inserted) sizes.push_back(0);
        cc.color_of[x] = it->second;
        sizes[it->second]++;
    }
    cc.class_size = std::move(sizes);
    return cc;
}

CertifiedSet ks_free_from_classes(const CubeParams& params,
                                  const std::vector<std::uint32_t>& color_of,
                                  const std::vector<std::uint64_t>& class_size,
                                  int s, const char* method) {
    std::vector<std::uint32_t> order(class_size.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return class_size[a] > class_size[b];
    });
    std::size_t take = std::min<std::size_t>(order.size(), (std::size_t)(s - 1));
    std::vector<char> chosen(class_size.size(), 0);
    for (std::size_t i = 0; i < take; ++i) chosen[order[i]] = 1;

    CertifiedSet set;
    set.params = params;
    for (std::uint64_t x = 0; x < (std::uint64_t)color_of.size(); ++x)
        if (chosen[color_of[x]]) set.vertices.push_back(x);
    set.kind = s == 2 ? CertKind::independent : CertKind::ks_free;
    set.verified = false;
    set.method = method;
    return set;
}

} // namespace hkfree
