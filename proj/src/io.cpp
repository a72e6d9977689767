#include "hkfree/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hkfree {

std::string format_set_file(const std::vector<Vertex>& vertices, int n) {
    std::string out;
    out.reserve(vertices.size() * ((n + 3) / 4 + 1));
    for (Vertex x : vertices) {
        out += vertex_to_hex(x, n);
        out += '\n';
    }
    return out;
}

std::vector<Vertex> parse_set_file(const std::string& text, int n) {
    std::vector<Vertex> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(vertex_from_hex(line, n));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string format_coloring_csv(const std::vector<std::uint32_t>& color_of, int n) {
    std::string out = "vertex_hex,color_index\n";
    for (std::uint64_t x = 0; x < (std::uint64_t)color_of.size(); ++x) {
        out += vertex_to_hex(x, n);
        out += ',';
        out += std::to_string(color_of[x]);
        out += '\n';
    }
    return out;
}

std::vector<std::uint32_t> parse_coloring_csv(const std::string& text, int n) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::uint32_t> out;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (lineno == 1) {
            if (line != "vertex_hex,color_index")
                throw std::invalid_argument("line 1: bad coloring header");
            continue;
        }
        if (line.empty()) continue;
        std::size_t comma = line.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("line " + std::to_string(lineno) + ": missing comma");
        Vertex x = vertex_from_hex(line.substr(0, comma), n);
        if (x != out.size())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": vertices out of order");
        out.push_back((std::uint32_t)std::stoul(line.substr(comma + 1)));
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void atomic_write_file(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << content;
        if (!out.good()) throw std::runtime_error("short write to " + tmp);
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot rename " + tmp + " to " + path);
}

ordered_json params_json(const CubeParams& params) {
    return ordered_json{{"n", params.n}, {"r", params.r}, {"s", params.s}};
}

ordered_json certificate_json(const CertifiedSet& set) {
    return ordered_json{{"kind", cert_kind_name(set.kind)},
                        {"params", params_json(set.params)},
                        {"verified", set.verified},
                        {"method", set.method},
                        {"size", set.vertices.size()}};
}

ordered_json rational_json(const Rational& value, bool asymptotic) {
    ordered_json j{{"num", int128_to_string(value.num)},
                   {"den", int128_to_string(value.den)},
                   {"decimal", value.to_decimal(4)}};
    if (asymptotic) j["asymptotic"] = true;
    return j;
}

ordered_json search_result_json(const SearchResult& result, int hex_width_n) {
    ordered_json witness = ordered_json::array();
    for (Vertex x : result.witness) witness.push_back(vertex_to_hex(x, hex_width_n));
    return ordered_json{{"value", result.value},
                        {"witness", witness},
                        {"exact", result.exact},
                        {"nodes", result.nodes},
                        {"canonical_witness", result.canonical}};
}

ordered_json boost_result_json(const BoostResult& result) {
    ordered_json translates = ordered_json::array();
    for (Vertex u : result.translates) translates.push_back(vertex_to_hex(u, result.params.n));
    return ordered_json{{"params", params_json(result.params)},
                        {"seed", result.seed},
                        {"trials", result.trials},
                        {"translates", translates},
                        {"best_trial", result.best_trial},
                        {"size", result.size},
                        {"bound", rational_json(result.bound)},
                        {"bound_floor", int128_to_string(result.bound.floor())},
                        {"below_bound", result.below_bound},
                        {"certificate", certificate_json(result.set)}};
}

ordered_json bounds_report_json(const BoundsReport& report) {
    ordered_json j;
    j["params"] = ordered_json{{"n", report.n}, {"r", report.r}, {"t", report.t}, {"s", report.s}};
    j["lower"] = ordered_json{
        {"leading_general", rational_json(report.lower.leading_general, true)},
        {"leading_subsequence", rational_json(report.lower.leading_subsequence, true)},
        {"subsequence_witness", ordered_json{{"m", report.lower.subseq_m}, {"k", report.lower.subseq_k}}}};
    if (report.upper_r2_exact)
        j["upper_r2"] = rational_json(*report.upper_r2_exact);
    ordered_json pp = ordered_json::array();
    for (const auto& b : report.upper_prime_power)
        pp.push_back(ordered_json{{"i", b.i},
                                  {"coefficient", b.coefficient.to_string()},
                                  {"value", rational_json(b.value, true)}});
    j["upper_prime_power"] = pp;
    if (report.prime_power_min_i)
        j["upper_prime_power_min_i"] = report.upper_prime_power[*report.prime_power_min_i].i;
    ordered_json tr = ordered_json::array();
    for (const auto& tb : report.transfer)
        tr.push_back(ordered_json{{"k", tb.k},
                                  {"m_value", tb.m_value},
                                  {"bound", rational_json(tb.bound)}});
    j["transfer"] = tr;
    ordered_json cons = ordered_json::array();
    for (const auto& c : report.constructed)
        cons.push_back(ordered_json{{"engine", c.engine}, {"size", c.size}});
    j["constructed"] = cons;
    if (report.exact_alpha)
        j["exact_alpha"] = *report.exact_alpha;
    else
        j["exact_alpha"] = nullptr;
    return j;
}

std::string bounds_report_csv_header() {
    return "n,r,s,lower_general,lower_subsequence,upper_r2,min_transfer,best_constructed,exact_alpha\n";
}

std::string bounds_report_csv_row(const BoundsReport& report) {
    std::string row = std::to_string(report.n) + "," + std::to_string(report.r) + "," +
                      std::to_string(report.s) + "," +
                      report.lower.leading_general.to_decimal(4) + "," +
                      report.lower.leading_subsequence.to_decimal(4) + ",";
    row += report.upper_r2_exact ? report.upper_r2_exact->to_decimal(4) : "";
    row += ",";
    const Rational* min_tr = nullptr;
    for (const auto& tb : report.transfer)
        if (!min_tr || tb.bound < *min_tr) min_tr = &tb.bound;
    row += min_tr ? min_tr->to_decimal(4) : "";
    row += ",";
    std::uint64_t best = 0;
    for (const auto& c : report.constructed) best = std::max(best, c.size);
    row += report.constructed.empty() ? "" : std::to_string(best);
    row += ",";
    row += report.exact_alpha ? std::to_string(*report.exact_alpha) : "";
    row += "\n";
    return row;
}

} // namespace hkfree
