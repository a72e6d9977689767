#pragma once

// File formats: newline-delimited vertex hex for sets, CSV for colorings,
// JSON for certificates and reports. Output files are written atomically.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "hkfree/bounds.hpp"
#include "hkfree/boosting.hpp"
#include "hkfree/cube.hpp"
#include "hkfree/exact.hpp"
#include "hkfree/rational.hpp"

namespace hkfree {

using ordered_json = nlohmann::ordered_json;

std::string format_set_file(const std::vector<Vertex>& vertices, int n);
// Throws std::invalid_argument with a 1-based line number on malformed input.
std::vector<Vertex> parse_set_file(const std::string& text, int n);

// Header "vertex_hex,color_index", one row per vertex in ascending order.
std::string format_coloring_csv(const std::vector<std::uint32_t>& color_of, int n);
std::vector<std::uint32_t> parse_coloring_csv(const std::string& text, int n);

std::string read_file(const std::string& path);
// write-temp-then-rename so readers never observe a partial file
void atomic_write_file(const std::string& path, const std::string& content);

ordered_json params_json(const CubeParams& params);
ordered_json certificate_json(const CertifiedSet& set);
ordered_json rational_json(const Rational& value, bool asymptotic = false);
ordered_json search_result_json(const SearchResult& result, int hex_width_n);
ordered_json boost_result_json(const BoostResult& result);
ordered_json bounds_report_json(const BoundsReport& report);
std::string bounds_report_csv_row(const BoundsReport& report);
std::string bounds_report_csv_header();

} // namespace hkfree
