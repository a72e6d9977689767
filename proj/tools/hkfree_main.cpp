// hkfree: construct, certify, and bound K_s-free vertex sets in the
// distance-r graphs H_r(n) on {0,1}^n.
//
// Exit codes: 0 success, 2 usage or input error, 3 verification failure,
// 4 budget exceeded.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <unordered_map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hkfree/bch_coloring.hpp"
#include "hkfree/bounds.hpp"
#include "hkfree/boosting.hpp"
#include "hkfree/cube.hpp"
#include "hkfree/exact.hpp"
#include "hkfree/io.hpp"
#include "hkfree/layer_coloring.hpp"

using namespace hkfree;

namespace {

void emit(const std::string& text, const std::string& path) {
    if (path.empty())
        std::cout << text;
    else
        atomic_write_file(path, text);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

struct EngineColoring {
    std::vector<std::uint32_t> color_of;
    std::vector<std::uint64_t> class_size;
    std::uint64_t capacity = 0;
    std::string method;
};

EngineColoring run_engine(const std::string& engine, const CubeParams& params) {
    EngineColoring out;
    if (engine == "bch") {
        auto fc = build_fiber_coloring(params);
        out.color_of = std::move(fc.color_of);
        out.class_size = std::move(fc.class_size);
        out.capacity = fc.capacity;
        out.method = "bch_fiber";
    } else if (engine == "layer") {
        auto cc = build_cube_coloring(params);
        out.color_of = std::move(cc.color_of);
        out.class_size = std::move(cc.class_size);
        out.capacity = cc.capacity;
        out.method = "layer_coloring";
    } else {
        throw std::invalid_argument("unknown engine: " + engine);
    }
    return out;
}

// 0 = no K_s found (certificate upgraded), 3 = K_s found, 4 = budget exceeded
int verify_set(CertifiedSet& set, int s, std::uint64_t max_pairs,
               std::optional<std::vector<Vertex>>& witness) {
    try {
        witness = contains_ks(set.vertices, set.params, s, max_pairs);
    } catch (const BudgetError&) {
        set.kind = CertKind::unverified;
        set.verified = false;
        return 4;
    }
    if (witness) {
        set.kind = CertKind::unverified;
        set.verified = false;
        return 3;
    }
    set.kind = s == 2 ? CertKind::independent : CertKind::ks_free;
    set.verified = true;
    if (!set.method.empty()) set.method += "; ";
    set.method += "exhaustive K_s scan";
    return 0;
}

CertifiedSet load_set(const std::string& path, const CubeParams& params) {
    CertifiedSet set;
    set.params = params;
    set.vertices = parse_set_file(read_file(path), params.n);
    std::sort(set.vertices.begin(), set.vertices.end());
    set.vertices.erase(std::unique(set.vertices.begin(), set.vertices.end()),
                       set.vertices.end());
    set.kind = CertKind::unverified;
    set.method = "file";
    return set;
}

struct BoundsOptions {
    bool with_exact = false;
    std::vector<std::string> engines;
    int transfer_max_k = -1; // default: every k whose exact m_s fits the budget
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    SearchBudget budget;
};

BoundsReport make_report(int n, int r, int s, const BoundsOptions& opt) {
    auto params = CubeParams::make(n, r, s);
    std::vector<ConstructionSize> constructed;
    for (const auto& engine : opt.engines) {
        if (engine == "boost") {
            auto fc = build_fiber_coloring(params);
            std::uint32_t best = 0;
            for (std::uint32_t c = 0; c < fc.num_classes(); ++c)
                if (fc.class_size[c] > fc.class_size[best]) best = c;
            auto fiber = independent_set_from_fiber(fc, best);
            auto boosted = boost(fiber, s, opt.trials, opt.seed);
            constructed.push_back({"boost", boosted.size});
            continue;
        }
        auto col = run_engine(engine, params);
        auto set =
            ks_free_from_classes(params, col.color_of, col.class_size, s, col.method.c_str());
        constructed.push_back({engine, set.vertices.size()});
    }
    std::optional<std::uint64_t> exact_alpha;
    if (opt.with_exact) {
        auto res = max_ks_free(params, opt.budget);
        if (!res.exact) throw BudgetError("exact alpha search exceeded the node budget");
        exact_alpha = res.value;
    }
    std::vector<TransferBound> transfer;
    int kmax = opt.transfer_max_k >= 0 ? opt.transfer_max_k : std::min(n, r + 1);
    SearchBudget layer_budget = opt.budget;
    if (opt.transfer_max_k < 0) // defaulted sweep stays interactive; opt in for the full budget
        layer_budget.max_nodes = std::min<std::uint64_t>(layer_budget.max_nodes, 4000000);
    for (int k = 0; k <= kmax && k <= n; ++k) {
        try {
            auto ms = m_s_exact(n, k, k - r / 2, s, layer_budget);
            if (!ms.exact) continue;
            transfer.push_back({k, ms.value, transfer_upper_bound(n, k, r / 2, s, ms.value)});
        } catch (const BudgetError&) {
            continue; // layers beyond the budget are simply not reported
        }
    }
    return assemble_report(n, r, s, transfer, constructed, exact_alpha);
}

// Two-pass streaming construct for dimensions too large to materialize:
// pass 1 builds the class histogram, pass 2 streams the union of the
// s-1 largest classes straight into the output file.
int construct_streaming(const CubeParams& params, const std::string& engine, int s,
                        const std::string& out, const std::string& coloring_path,
                        std::uint64_t max_pairs, const std::string& cert_path) {
    std::function<std::uint64_t(Vertex)> value_of;
    std::uint64_t capacity;
    std::string method;
    FieldTable field(fiber_field_degree(params.n));
    if (engine == "bch") {
        int t = params.t;
        int n = params.n;
        value_of = [&field, n, t](Vertex x) { return fiber_color_value(x, n, field, t); };
        capacity = std::uint64_t{1} << (std::uint64_t)(params.t * fiber_field_degree(params.n));
        method = "bch_fiber";
    } else if (engine == "layer") {
        auto lcv = std::make_shared<LayerColorValue>(params);
        value_of = [lcv](Vertex x) { return (*lcv)(x); };
        capacity = lcv->capacity();
        method = "layer_coloring";
    } else {
        throw std::invalid_argument("unknown engine: " + engine);
    }

    struct ClassInfo {
        std::uint64_t count = 0;
        std::uint64_t first_seen = 0;
    };
    std::unordered_map<std::uint64_t, ClassInfo> histogram;
    std::uint64_t total = std::uint64_t{1} << params.n;
    std::uint64_t next_rank = 0;
    for (Vertex x = 0; x < total; ++x) {
        auto [it, inserted] = histogram.try_emplace(value_of(x));
        if (inserted) it->second.first_seen = next_rank++;
        it->second.count++;
    }
    std::vector<std::pair<std::uint64_t, ClassInfo>> classes(histogram.begin(), histogram.end());
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.second.count != b.second.count) return a.second.count > b.second.count;
        return a.second.first_seen < b.second.first_seen;
    });
    std::size_t take = std::min<std::size_t>(classes.size(), (std::size_t)(s - 1));
    std::unordered_map<std::uint64_t, char> chosen;
    std::uint64_t set_size = 0;
    for (std::size_t i = 0; i < take; ++i) {
        chosen[classes[i].first] = 1;
        set_size += classes[i].second.count;
    }

    auto stream_to = [&](const std::string& path, const std::function<void(std::ostream&)>& fn) {
        std::string tmp = path + ".tmp";
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os) throw std::runtime_error("cannot write " + tmp);
            fn(os);
            if (!os.good()) throw std::runtime_error("short write to " + tmp);
        }
        if (std::rename(tmp.c_str(), path.c_str()) != 0)
            throw std::runtime_error("cannot rename " + tmp);
    };
    std::vector<Vertex> collected; // only kept when verification is affordable
    bool verify_possible = set_size <= 2000000 && set_size * (set_size - 1) / 2 <= max_pairs;
    if (!out.empty())
        stream_to(out, [&](std::ostream& os) {
            for (Vertex x = 0; x < total; ++x)
                if (chosen.count(value_of(x))) {
                    os << vertex_to_hex(x, params.n) << '\n';
                    if (verify_possible) collected.push_back(x);
                }
        });
    else if (verify_possible)
        for (Vertex x = 0; x < total; ++x)
            if (chosen.count(value_of(x))) collected.push_back(x);
    if (!coloring_path.empty()) {
        // dense indices follow first-seen order, matching the materialized path
        std::unordered_map<std::uint64_t, std::uint64_t> dense;
        for (const auto& [value, info] : histogram) dense[value] = info.first_seen;
        stream_to(coloring_path, [&](std::ostream& os) {
            os << "vertex_hex,color_index\n";
            for (Vertex x = 0; x < total; ++x)
                os << vertex_to_hex(x, params.n) << ',' << dense[value_of(x)] << '\n';
        });
    }

    CertifiedSet cert;
    cert.params = params;
    cert.kind = s == 2 ? CertKind::independent : CertKind::ks_free;
    cert.verified = false;
    cert.method = method;
    std::optional<std::vector<Vertex>> witness;
    if (verify_possible) {
        cert.vertices = std::move(collected);
        if (verify_set(cert, s, max_pairs, witness) == 3)
            throw std::logic_error("construction failed its own verification");
    }
    ordered_json j = certificate_json(cert);
    j["size"] = set_size; // cert.vertices may be empty in pure streaming mode
    j["classes"] = classes.size();
    j["class_capacity"] = capacity;
    if (!cert_path.empty()) atomic_write_file(cert_path, dump(j));
    std::cout << dump(j);
    return 0;
}

std::vector<std::string> split_engines(const std::string& csv) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        if (comma > pos) out.push_back(csv.substr(pos, comma - pos));
        pos = comma + 1;
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"K_s-free sets in Hamming distance graphs H_r(n)"};
    app.require_subcommand(1);

    auto* c_cmd = app.add_subcommand("construct", "build a K_s-free set from a proper coloring");
    std::string c_engine = "bch", c_out, c_cert, c_coloring;
    int c_n = 0, c_r = 0, c_s = 2;
    std::uint64_t c_max_pairs = 100000000;
    c_cmd->add_option("--engine", c_engine, "coloring engine: bch or layer");
    c_cmd->add_option("--n", c_n, "cube dimension")->required();
    c_cmd->add_option("--r", c_r, "distance (even)")->required();
    c_cmd->add_option("--s", c_s, "forbidden clique size");
    c_cmd->add_option("--out", c_out, "set file (hex lines)");
    c_cmd->add_option("--cert", c_cert, "certificate JSON file");
    c_cmd->add_option("--coloring", c_coloring, "coloring CSV file");
    c_cmd->add_option("--max-pairs", c_max_pairs, "re-verification pair budget");
    int c_materialize_cap = 24;
    c_cmd->add_option("--materialize-cap", c_materialize_cap,
                      "largest n handled in memory; larger n stream in two passes");

    auto* v_cmd = app.add_subcommand("verify", "exhaustively check a set file for K_s");
    std::string v_input, v_cert;
    int v_n = 0, v_r = 0, v_s = 2;
    std::uint64_t v_max_pairs = 100000000;
    v_cmd->add_option("--input", v_input, "set file")->required();
    v_cmd->add_option("--n", v_n, "cube dimension")->required();
    v_cmd->add_option("--r", v_r, "distance")->required();
    v_cmd->add_option("--s", v_s, "forbidden clique size");
    v_cmd->add_option("--cert", v_cert, "certificate JSON file");
    v_cmd->add_option("--max-pairs", v_max_pairs, "pair budget");

    auto* b_cmd = app.add_subcommand("boost", "amplify an independent set by random translates");
    std::string b_input, b_out, b_json;
    int b_n = 0, b_r = 0, b_s = 3;
    std::uint64_t b_trials = 1000, b_seed = 0, b_max_pairs = 100000000;
    b_cmd->add_option("--input", b_input, "independent set file")->required();
    b_cmd->add_option("--n", b_n, "cube dimension")->required();
    b_cmd->add_option("--r", b_r, "distance (even)")->required();
    b_cmd->add_option("--s", b_s, "forbidden clique size");
    b_cmd->add_option("--trials", b_trials, "number of random trials");
    b_cmd->add_option("--seed", b_seed, "RNG seed");
    b_cmd->add_option("--out", b_out, "boosted set file");
    b_cmd->add_option("--json", b_json, "result JSON file");
    b_cmd->add_option("--max-pairs", b_max_pairs, "verification pair budget");

    auto* e_cmd = app.add_subcommand("exact", "exhaustive searches");
    auto* ea_cmd = e_cmd->add_subcommand("alpha", "exact alpha_s(H_r(n))");
    int ea_n = 0, ea_r = 0, ea_s = 2;
    bool ea_canonical = false;
    SearchBudget ea_budget;
    std::string ea_json;
    ea_cmd->add_option("--n", ea_n)->required();
    ea_cmd->add_option("--r", ea_r)->required();
    ea_cmd->add_option("--s", ea_s);
    ea_cmd->add_flag("--canonical", ea_canonical, "canonicalize the witness");
    ea_cmd->add_option("--max-nodes", ea_budget.max_nodes);
    ea_cmd->add_option("--max-vertices", ea_budget.max_vertices);
    ea_cmd->add_option("--json", ea_json, "result JSON file");
    auto* em_cmd = e_cmd->add_subcommand("ms", "exact m_s(n,k,l)");
    int em_n = 0, em_k = 0, em_l = 0, em_s = 2;
    bool em_canonical = false;
    SearchBudget em_budget;
    std::string em_json;
    em_cmd->add_option("--n", em_n)->required();
    em_cmd->add_option("--k", em_k)->required();
    em_cmd->add_option("--l", em_l)->required();
    em_cmd->add_option("--s", em_s);
    em_cmd->add_flag("--canonical", em_canonical, "canonicalize the witness");
    em_cmd->add_option("--max-nodes", em_budget.max_nodes);
    em_cmd->add_option("--max-vertices", em_budget.max_vertices);
    em_cmd->add_option("--json", em_json, "result JSON file");
    e_cmd->require_subcommand(1);

    auto* bd_cmd = app.add_subcommand("bounds", "evaluate all bounds for one (n, r, s)");
    int bd_n = 0, bd_r = 0, bd_s = 2;
    BoundsOptions bd_opt;
    std::string bd_json, bd_construct;
    bd_cmd->add_option("--n", bd_n)->required();
    bd_cmd->add_option("--r", bd_r)->required();
    bd_cmd->add_option("--s", bd_s);
    bd_cmd->add_flag("--exact", bd_opt.with_exact, "include exact alpha_s");
    bd_cmd->add_option("--construct", bd_construct, "comma list of engines: bch,layer,boost");
    bd_cmd->add_option("--transfer-max-k", bd_opt.transfer_max_k,
                       "largest layer for transfer bounds");
    bd_cmd->add_option("--trials", bd_opt.trials, "boost trials");
    bd_cmd->add_option("--seed", bd_opt.seed, "boost seed");
    bd_cmd->add_option("--max-nodes", bd_opt.budget.max_nodes);
    bd_cmd->add_option("--max-vertices", bd_opt.budget.max_vertices);
    bd_cmd->add_option("--json", bd_json, "report JSON file");

    auto* r_cmd = app.add_subcommand("report", "sweep n over a range");
    int r_nmin = 0, r_nmax = 0, r_rr = 2, r_s = 2;
    BoundsOptions r_opt;
    std::string r_format = "csv", r_out, r_construct;
    r_cmd->add_option("--n-min", r_nmin)->required();
    r_cmd->add_option("--n-max", r_nmax)->required();
    r_cmd->add_option("--r", r_rr);
    r_cmd->add_option("--s", r_s);
    r_cmd->add_flag("--exact", r_opt.with_exact, "include exact alpha_s where in budget");
    r_cmd->add_option("--construct", r_construct, "comma list of engines");
    r_cmd->add_option("--transfer-max-k", r_opt.transfer_max_k);
    r_cmd->add_option("--format", r_format, "csv or json");
    r_cmd->add_option("--out", r_out, "output file");
    r_cmd->add_option("--max-nodes", r_opt.budget.max_nodes);
    r_cmd->add_option("--max-vertices", r_opt.budget.max_vertices);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(c_cmd)) {
            auto params = CubeParams::make(c_n, c_r, c_s);
            if (c_n > c_materialize_cap)
                return construct_streaming(params, c_engine, c_s, c_out, c_coloring, c_max_pairs,
                                           c_cert);
            auto col = run_engine(c_engine, params);
            auto set = ks_free_from_classes(params, col.color_of, col.class_size, c_s,
                                            col.method.c_str());
            std::optional<std::vector<Vertex>> witness;
            std::uint64_t sz = set.vertices.size();
            if (sz * (sz - 1) / 2 <= c_max_pairs) {
                if (verify_set(set, c_s, c_max_pairs, witness) == 3)
                    throw std::logic_error("construction failed its own verification");
            }
            if (!c_out.empty()) atomic_write_file(c_out, format_set_file(set.vertices, c_n));
            if (!c_coloring.empty())
                atomic_write_file(c_coloring, format_coloring_csv(col.color_of, c_n));
            ordered_json j = certificate_json(set);
            j["classes"] = col.class_size.size();
            j["class_capacity"] = col.capacity;
            if (!c_cert.empty()) atomic_write_file(c_cert, dump(j));
            std::cout << dump(j);
            return 0;
        }

        if (app.got_subcommand(v_cmd)) {
            auto params = CubeParams::make(v_n, v_r, v_s, true);
            auto set = load_set(v_input, params);
            std::optional<std::vector<Vertex>> witness;
            int rc = verify_set(set, v_s, v_max_pairs, witness);
            ordered_json j = certificate_json(set);
            if (witness) {
                ordered_json w = ordered_json::array();
                for (Vertex x : *witness) w.push_back(vertex_to_hex(x, v_n));
                j["violation"] = w;
            }
            if (!v_cert.empty()) atomic_write_file(v_cert, dump(j));
            std::cout << dump(j);
            return rc;
        }

        if (app.got_subcommand(b_cmd)) {
            auto params = CubeParams::make(b_n, b_r, b_s);
            auto input = load_set(b_input, params);
            input.params.s = 2;
            std::optional<std::vector<Vertex>> witness;
            int rc = verify_set(input, 2, b_max_pairs, witness);
            if (rc != 0) {
                ordered_json j = certificate_json(input);
                j["error"] = "input set is not independent in H_r(n)";
                if (witness) {
                    ordered_json w = ordered_json::array();
                    for (Vertex x : *witness) w.push_back(vertex_to_hex(x, b_n));
                    j["violation"] = w;
                }
                std::cout << dump(j);
                return rc;
            }
            auto result = boost(input, b_s, b_trials, b_seed);
            if (result.size * (result.size - 1) / 2 <= b_max_pairs)
                verify_set(result.set, b_s, b_max_pairs, witness);
            if (!b_out.empty())
                atomic_write_file(b_out, format_set_file(result.set.vertices, b_n));
            ordered_json j = boost_result_json(result);
            if (!b_json.empty()) atomic_write_file(b_json, dump(j));
            std::cout << dump(j);
            return 0;
        }

        if (app.got_subcommand(e_cmd)) {
            SearchResult res;
            int n_for_hex;
            std::string json_path;
            if (e_cmd->got_subcommand(ea_cmd)) {
                auto params = CubeParams::make(ea_n, ea_r, ea_s, true);
                res = max_ks_free(params, ea_budget, ea_canonical);
                n_for_hex = ea_n;
                json_path = ea_json;
            } else {
                res = m_s_exact(em_n, em_k, em_l, em_s, em_budget, em_canonical);
                n_for_hex = em_n;
                json_path = em_json;
            }
            ordered_json j = search_result_json(res, n_for_hex);
            if (!json_path.empty()) atomic_write_file(json_path, dump(j));
            std::cout << dump(j);
            return res.exact ? 0 : 4;
        }

        if (app.got_subcommand(bd_cmd)) {
            bd_opt.engines = split_engines(bd_construct);
            auto report = make_report(bd_n, bd_r, bd_s, bd_opt);
            ordered_json j = bounds_report_json(report);
            if (!bd_json.empty()) atomic_write_file(bd_json, dump(j));
            std::cout << dump(j);
            return 0;
        }

        if (app.got_subcommand(r_cmd)) {
            if (r_nmin < 1 || r_nmax < r_nmin)
                throw std::invalid_argument("report: need 1 <= n-min <= n-max");
            r_opt.engines = split_engines(r_construct);
            std::string csv = bounds_report_csv_header();
            ordered_json arr = ordered_json::array();
            for (int n = r_nmin; n <= r_nmax; ++n) {
                BoundsOptions opt = r_opt;
                BoundsReport rep;
                try {
                    rep = make_report(n, r_rr, r_s, opt);
                } catch (const BudgetError&) {
                    opt.with_exact = false; // exact out of budget: report without it
                    rep = make_report(n, r_rr, r_s, opt);
                }
                csv += bounds_report_csv_row(rep);
                arr.push_back(bounds_report_json(rep));
            }
            emit(r_format == "json" ? arr.dump(2) + "\n" : csv, r_out);
            return 0;
        }
    } catch (const BudgetError& e) {
        std::cout << dump(ordered_json{{"error", e.what()}, {"code", 4}});
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cout << dump(ordered_json{{"error", e.what()}, {"code", 2}});
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
