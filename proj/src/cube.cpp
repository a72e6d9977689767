#include "hkfree/cube.hpp"

#include <algorithm>
#include <stdexcept>

namespace hkfree {

CubeParams CubeParams::make(int n, int r, int s, bool allow_odd_r) {
    if (n < 1) throw std::invalid_argument("params: n must be >= 1");
    if (r < 1 || r > 62) throw std::invalid_argument("params: r must be in 1..62");
    if (!allow_odd_r && r % 2 != 0)
        throw std::invalid_argument("params: r must be even (odd r only on the bipartite shortcut)");
    if (s < 2) throw std::invalid_argument("params: s must be >= 2");
    CubeParams p;
    p.n = n;
    p.r = r;
    p.t = r / 2;
    p.s = s;
    return p;
}

int hamming_distance_checked(Vertex x, Vertex y, int n) {
    if (n < 1 || n > 63) throw std::invalid_argument("hamming_distance: n out of range");
    Vertex lim = Vertex{1} << n;
    if (x >= lim || y >= lim) throw std::invalid_argument("hamming_distance: vertex outside {0,1}^n");
    return std::popcount(x ^ y);
}

bool are_adjacent(Vertex x, Vertex y, const CubeParams& params) {
    return hamming_distance_checked(x, y, params.n) == params.r;
}

std::vector<Vertex> masks_of_weight(int n, int k) {
    std::vector<Vertex> out;
    if (k < 0 || k > n) return out;
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    Vertex m = (Vertex{1} << k) - 1;
    Vertex lim = Vertex{1} << n;
    while (m < lim) {
        out.push_back(m);
        Vertex c = m & -m;
        Vertex r = m + c;
        m = (((r ^ m) >> 2) / c) | r; // Gosper's hack
    }
    return out;
}

std::vector<Vertex> neighbors_at_distance_r(Vertex x, const CubeParams& params) {
    if (params.n > kEnumerationCap)
        throw std::invalid_argument("neighbors_at_distance_r: n above enumeration cap");
    std::vector<Vertex> out;
    for (Vertex w : masks_of_weight(params.n, params.r)) out.push_back(x ^ w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vertex> translate(const std::vector<Vertex>& set, Vertex u, int n) {
    Vertex lim = Vertex{1} << n;
    if (u >= lim) throw std::invalid_argument("translate: u outside {0,1}^n");
    std::vector<Vertex> out;
    out.reserve(set.size());
    for (Vertex x : set) {
        if (x >= lim) throw std::invalid_argument("translate: set member outside {0,1}^n");
        out.push_back(x ^ u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string vertex_to_hex(Vertex x, int n) {
    int width = (n + 3) / 4;
    std::string s(width, '0');
    for (int i = width - 1; i >= 0; --i) {
        s[i] = "0123456789abcdef"[x & 0xf];
        x >>= 4;
    }
    return s;
}

Vertex vertex_from_hex(const std::string& text, int n) {
    int width = (n + 3) / 4;
    if ((int)text.size() != width)
        throw std::invalid_argument("vertex hex: expected " + std::to_string(width) +
                                    " digits, got \"" + text + "\"");
    Vertex x = 0;
    for (char c : text) {
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw std::invalid_argument("vertex hex: bad digit in \"" + text + "\"");
        x = x << 4 | d;
    }
    if (x >> n) throw std::invalid_argument("vertex hex: value outside {0,1}^n: \"" + text + "\"");
    return x;
}

LayerSet LayerSet::full_layer(int n, int k) {
    LayerSet layer;
    layer.n = n;
    layer.k = k;
    layer.members = masks_of_weight(n, k);
    return layer;
}

const char* cert_kind_name(CertKind kind) {
    switch (kind) {
        case CertKind::independent: return "independent";
        case CertKind::ks_free: return "ks_free";
        default: return "unverified";
    }
}

} // namespace hkfree
