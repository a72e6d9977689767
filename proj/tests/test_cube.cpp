#include "doctest.h"

#include <algorithm>
#include <map>

#include "hkfree/cube.hpp"

using namespace hkfree;

TEST_CASE("hamming distance basics") {
    CHECK(hamming_distance_checked(0b101, 0b101, 3) == 0);
    CHECK(hamming_distance_checked(0b000, 0b111, 3) == 3);
    // coordinatewise oracle for the 7-bit example
    {
        const char* a = "0110101";
        const char* b = "1010011";
        int count = 0;
        Vertex va = 0, vb = 0;
        for (int i = 0; i < 7; ++i) {
            if (a[i] != b[i]) ++count;
            va = va << 1 | (a[i] == '1');
            vb = vb << 1 | (b[i] == '1');
        }
        CHECK(count == 4);
        CHECK(hamming_distance_checked(va, vb, 7) == 4);
    }
    CHECK_THROWS(hamming_distance_checked(0b1000, 0, 3));
}

TEST_CASE("adjacency is distance exactly r") {
    auto p2 = CubeParams::make(3, 2);
    CHECK(are_adjacent(0b000, 0b011, p2));
    CHECK_FALSE(are_adjacent(0b000, 0b111, p2));
    auto p4 = CubeParams::make(5, 4);
    CHECK(are_adjacent(0b00000, 0b11110, p4));
}

TEST_CASE("neighbors at distance r") {
    auto p = CubeParams::make(3, 2);
    auto nb = neighbors_at_distance_r(0b000, p);
    CHECK(nb == std::vector<Vertex>{0b011, 0b101, 0b110});
    auto p7 = CubeParams::make(7, 2);
    CHECK(neighbors_at_distance_r(0, p7).size() == 21);
    auto p44 = CubeParams::make(4, 4);
    CHECK(neighbors_at_distance_r(0b0000, p44) == std::vector<Vertex>{0b1111});
    // ascending and distance-exact for a nonzero center
    auto nb2 = neighbors_at_distance_r(0b0101, CubeParams::make(4, 2));
    CHECK(std::is_sorted(nb2.begin(), nb2.end()));
    for (Vertex y : nb2) CHECK(hamming_distance(0b0101, y) == 2);
    CHECK(nb2.size() == 6);
}

TEST_CASE("translate is an isometry preserving cardinality") {
    std::vector<Vertex> s{0b000, 0b111};
    CHECK(translate(s, 0, 3) == s);
    CHECK(translate(s, 0b001, 3) == std::vector<Vertex>{0b001, 0b110});
    // distance multiset preserved, exhaustively for n <= 6
    for (int n = 1; n <= 6; ++n) {
        Vertex lim = Vertex{1} << n;
        for (Vertex x = 0; x < lim; ++x)
            for (Vertex y = 0; y < lim; ++y)
                for (Vertex u = 0; u < lim; u += 3)
                    if (hamming_distance(x ^ u, y ^ u) != hamming_distance(x, y)) {
                        CHECK(false);
                        return;
                    }
    }
    CHECK(true);
}

TEST_CASE("distance parity between layers") {
    // weight-i vs weight-j vertices: d >= |i-j| and d == i-j (mod 2)
    int n = 8;
    for (Vertex x = 0; x < (Vertex{1} << n); x += 5)
        for (Vertex y = 0; y < (Vertex{1} << n); y += 7) {
            int d = hamming_distance(x, y);
            int di = weight(x) - weight(y);
            if (di < 0) di = -di;
            CHECK(d >= di);
            CHECK((d - di) % 2 == 0);
        }
}

TEST_CASE("hex codec round trip and width") {
    CHECK(vertex_to_hex(0, 7) == "00");
    CHECK(vertex_to_hex(0x1f, 5) == "1f");
    CHECK(vertex_to_hex(0xabc, 12) == "abc");
    CHECK(vertex_from_hex("0b", 7) == 0xb);
    CHECK_THROWS(vertex_from_hex("b", 7));    // wrong width
    CHECK_THROWS(vertex_from_hex("8f", 7));   // value >= 2^7
    CHECK_THROWS(vertex_from_hex("0G", 7));
    for (Vertex x = 0; x < 512; ++x) CHECK(vertex_from_hex(vertex_to_hex(x, 9), 9) == x);
}

TEST_CASE("layers enumerate weight-k masks in order") {
    auto l = LayerSet::full_layer(5, 2);
    CHECK(l.members.size() == 10);
    CHECK(std::is_sorted(l.members.begin(), l.members.end()));
    for (Vertex m : l.members) CHECK(weight(m) == 2);
    CHECK(LayerSet::full_layer(4, 0).members == std::vector<Vertex>{0});
    CHECK(LayerSet::full_layer(4, 4).members == std::vector<Vertex>{0b1111});
}

TEST_CASE("params validation") {
    CHECK_THROWS(CubeParams::make(0, 2));
    CHECK_THROWS(CubeParams::make(4, 3));
    CHECK_THROWS(CubeParams::make(4, 2, 1));
    auto odd = CubeParams::make(4, 3, 3, true);
    CHECK(odd.r == 3);
    // r > n is allowed: the graph is simply edgeless
    auto empty = CubeParams::make(1, 2);
    CHECK(neighbors_at_distance_r(0, empty).empty());
}
