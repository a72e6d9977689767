#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "hkfree/io.hpp"

using namespace hkfree;

TEST_CASE("set files round-trip byte-identically") {
    std::vector<Vertex> set{0x00, 0x0b, 0x7f};
    std::string text = format_set_file(set, 7);
    CHECK(text == "00\n0b\n7f\n");
    auto parsed = parse_set_file(text, 7);
    CHECK(parsed == set);
    CHECK(format_set_file(parsed, 7) == text);
    CHECK(parse_set_file("", 7).empty());
    CHECK(parse_set_file("0b\r\n", 7) == std::vector<Vertex>{0xb}); // CRLF tolerated
}

TEST_CASE("set file parse errors carry line numbers") {
    try {
        parse_set_file("00\n0b\nzz\n", 7);
        CHECK(false);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS(parse_set_file("ff\n", 7)); // out of range for n=7
}

TEST_CASE("coloring csv round-trips byte-identically") {
    std::vector<std::uint32_t> colors{0, 1, 1, 0};
    std::string csv = format_coloring_csv(colors, 2);
    CHECK(csv == "vertex_hex,color_index\n0,0\n1,1\n2,1\n3,0\n");
    CHECK(parse_coloring_csv(csv, 2) == colors);
    CHECK(format_coloring_csv(parse_coloring_csv(csv, 2), 2) == csv);
    CHECK_THROWS(parse_coloring_csv("bad header\n0,0\n", 2));
    CHECK_THROWS(parse_coloring_csv("vertex_hex,color_index\n1,0\n", 2)); // out of order
}

TEST_CASE("atomic write leaves no temp file behind") {
    auto dir = std::filesystem::temp_directory_path() / "hkfree_io_test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.txt").string();
    atomic_write_file(path, "payload\n");
    CHECK(read_file(path) == "payload\n");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    atomic_write_file(path, "payload2\n"); // overwrite through rename
    CHECK(read_file(path) == "payload2\n");
    std::filesystem::remove_all(dir);
}

TEST_CASE("certificate json carries kind, params, verified, method") {
    CertifiedSet set;
    set.params = CubeParams::make(7, 2, 2);
    set.vertices = {0, 3};
    set.kind = CertKind::independent;
    set.verified = true;
    set.method = "bch_fiber";
    auto j = certificate_json(set);
    CHECK(j["kind"] == "independent");
    CHECK(j["params"]["n"] == 7);
    CHECK(j["params"]["r"] == 2);
    CHECK(j["verified"] == true);
    CHECK(j["method"] == "bch_fiber");
    CHECK(j["size"] == 2);
}

TEST_CASE("rational json has exact and decimal forms") {
    auto j = rational_json(Rational(65536, 15), true);
    CHECK(j["num"] == "65536");
    CHECK(j["den"] == "15");
    CHECK(j["decimal"] == "4369.0666");
    CHECK(j["asymptotic"] == true);
}
