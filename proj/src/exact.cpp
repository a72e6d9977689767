#include "hkfree/exact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <chrono>
#include <unordered_set>

namespace hkfree {

namespace {

// dense adjacency over a small vertex universe
struct BitGraph {
    int n = 0;
    int w = 0;
    std::vector<std::uint64_t> adj;

    explicit BitGraph(int n_) : n(n_), w((n_ + 63) / 64), adj((std::size_t)n_ * w, 0) {}
    void add_edge(int a, int b) {
        adj[(std::size_t)a * w + (b >> 6)] |= std::uint64_t{1} << (b & 63);
        adj[(std::size_t)b * w + (a >> 6)] |= std::uint64_t{1} << (a & 63);
    }
    bool has_edge(int a, int b) const {
        return adj[(std::size_t)a * w + (b >> 6)] >> (b & 63) & 1;
    }
    const std::uint64_t* row(int v) const { return &adj[(std::size_t)v * w]; }
};

using Bits = std::vector<std::uint64_t>;

int popcount_bits(const Bits& b) {
    int c = 0;
    for (std::uint64_t word : b) c += std::popcount(word);
    return c;
}

struct BudgetExhausted {};

// Branch and bound for the largest subset spanning no K_s. Pruning: greedy
// clique cover of the candidates counting min(|Q|, s-1) per clique.
// Branching vertex: maximum degree within the residual candidates.
struct KsFreeSolver {
    const BitGraph& g;
    int s;
    std::uint64_t node_cap;
    double time_cap = 0; // seconds; 0 disables
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    std::uint64_t nodes = 0;
    int target = -1; // decision mode: stop once best reaches target
    std::vector<int> best, cur;
    Bits cur_bits;

    KsFreeSolver(const BitGraph& g_, int s_, std::uint64_t cap)
        : g(g_), s(s_), node_cap(cap), cur_bits(g_.w, 0) {}

    bool clique_of_size(Bits& cand, int need) {
        if (need == 0) return true;
        if (popcount_bits(cand) < need) return false;
        if (need == 1) return true;
        for (int i = 0; i < g.w; ++i) {
            std::uint64_t word = cand[i];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                int v = i * 64 + b;
                cand[i] &= ~(std::uint64_t{1} << b); // forward search only
                Bits next(g.w);
                for (int j = 0; j < g.w; ++j) next[j] = cand[j] & g.row(v)[j];
                if (clique_of_size(next, need - 1)) return true;
            }
        }
        return false;
    }

    bool creates_ks(const Bits& chosen, int v) {
        Bits cand(g.w);
        for (int j = 0; j < g.w; ++j) cand[j] = chosen[j] & g.row(v)[j];
        return clique_of_size(cand, s - 1);
    }

    // TODO: the greedy cover bound is weak on share-exactly-l family graphs
    // (m_3(8,3,2) burns ~1.4e8 nodes); a clique-pair refinement would cut this.
    int cover_bound(const Bits& P) {
        Bits rem(P);
        int bound = 0;
        for (;;) {
            int v = -1;
            for (int i = 0; i < g.w && v < 0; ++i)
                if (rem[i]) v = i * 64 + std::countr_zero(rem[i]);
            if (v < 0) break;
            rem[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            Bits cand(g.w);
            for (int j = 0; j < g.w; ++j) cand[j] = rem[j] & g.row(v)[j];
            int size = 1;
            for (;;) {
                // grow toward the candidate keeping the most co-candidates
                int pick = -1, pick_count = -1;
                for (int i = 0; i < g.w; ++i) {
                    std::uint64_t word = cand[i];
                    while (word) {
                        int b = std::countr_zero(word);
                        word &= word - 1;
                        int u = i * 64 + b;
                        int c = 0;
                        for (int j = 0; j < g.w; ++j) c += std::popcount(cand[j] & g.row(u)[j]);
                        if (c > pick_count) {
                            pick_count = c;
                            pick = u;
                        }
                    }
                }
                if (pick < 0) break;
                ++size;
                rem[pick >> 6] &= ~(std::uint64_t{1} << (pick & 63));
                for (int j = 0; j < g.w; ++j) cand[j] &= g.row(pick)[j];
            }
            bound += std::min(size, s - 1);
        }
        return bound;
    }

    void include_and_recurse(int v, const Bits& P) {
        Bits filtered(P);
        filtered[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        cur.push_back(v);
        cur_bits[v >> 6] |= std::uint64_t{1} << (v & 63);
        Bits next(filtered);
        for (int i = 0; i < g.w; ++i) {
            std::uint64_t word = filtered[i];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                if (creates_ks(cur_bits, i * 64 + b)) next[i] &= ~(std::uint64_t{1} << b);
            }
        }
        run(next);
        cur.pop_back();
        cur_bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    void run(Bits& P) {
        if (target >= 0 && (int)best.size() >= target) return;
        if (++nodes > node_cap) throw BudgetExhausted{};
        if (time_cap > 0 && (nodes & 0xffff) == 0 &&
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count() >
                time_cap)
            throw BudgetExhausted{};
        int pc = popcount_bits(P);
        if ((int)cur.size() + pc <= (int)best.size()) return;
        if (pc == 0) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if ((int)cur.size() + cover_bound(P) <= (int)best.size()) return;
        int v = -1, vd = -1;
        for (int i = 0; i < g.w; ++i) {
            std::uint64_t word = P[i];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                int u = i * 64 + b;
                int d = 0;
                for (int j = 0; j < g.w; ++j) d += std::popcount(P[j] & g.row(u)[j]);
                if (d > vd) {
                    vd = d;
                    v = u;
                }
            }
        }
        if (!creates_ks(cur_bits, v)) include_and_recurse(v, P);
        if (target >= 0 && (int)best.size() >= target) return;
        Bits without(P);
        without[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        run(without);
    }

    std::vector<int> greedy_round(const Bits& alive) {
        std::vector<int> seed;
        for (int v = 0; v < g.n; ++v) {
            if (!(alive[v >> 6] >> (v & 63) & 1)) continue;
            bool ok = true;
            for (int u : seed)
                if (g.has_edge(u, v)) {
                    ok = false;
                    break;
                }
            if (ok) seed.push_back(v);
        }
        return seed;
    }

    // s-1 rounds of maximum independent sets as the starting incumbent;
    // exact_rounds spends search nodes, the plain variant never does
    std::vector<int> round_incumbent(const Bits& alive_init, bool exact_rounds) {
        std::vector<int> out;
        Bits alive(alive_init);
        for (int round = 0; round < s - 1; ++round) {
            if (popcount_bits(alive) == 0) break;
            std::vector<int> part = greedy_round(alive);
            if (exact_rounds) {
                KsFreeSolver mis(g, 2, node_cap - std::min(node_cap, nodes));
                mis.time_cap = time_cap;
                mis.started = started;
                mis.best = part;
                Bits P(alive);
                mis.run(P);
                nodes += mis.nodes;
                part = mis.best;
            }
            for (int v : part) {
                out.push_back(v);
                alive[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
            }
        }
        return out;
    }

    // force0: valid when index 0's vertex lies in every optimum's orbit
    // (vertex-transitive components)
    void solve(bool force0) {
        Bits all(g.w, 0);
        for (int v = 0; v < g.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        best = round_incumbent(all, false); // holds the greedy answer whatever happens below
        std::vector<int> stronger = round_incumbent(all, true);
        if (stronger.size() > best.size()) best = stronger;
        if ((int)best.size() >= cover_bound(all)) return; // root bound already met
        if (force0 && g.n > 0)
            include_and_recurse(0, all);
        else
            run(all);
    }
};

// lexicographically least optimal witness via a chain of decision queries
bool lex_canonicalize(const BitGraph& g, int s, int value, std::uint64_t node_cap,
                      std::vector<int>& out) {
    std::uint64_t spent = 0;
    std::vector<int> prefix;
    Bits prefix_bits(g.w, 0);
    int low = 0;
    while ((int)prefix.size() < value) {
        bool extended = false;
        for (int v = low; v < g.n && !extended; ++v) {
            if (node_cap <= spent) return false;
            KsFreeSolver dec(g, s, node_cap - spent);
            if (dec.creates_ks(prefix_bits, v)) continue;
            dec.cur = prefix;
            dec.cur_bits = prefix_bits;
            dec.target = value;
            dec.best = prefix;
            Bits P(g.w, 0);
            for (int u = v; u < g.n; ++u) P[u >> 6] |= std::uint64_t{1} << (u & 63);
            try {
                dec.include_and_recurse(v, P);
            } catch (const BudgetExhausted&) {
                return false;
            }
            spent += dec.nodes;
            if ((int)dec.best.size() >= value) {
                prefix.push_back(v);
                prefix_bits[v >> 6] |= std::uint64_t{1} << (v & 63);
                low = v + 1;
                extended = true;
            }
        }
        if (!extended) return false; // defensive: value was certified, so this should not happen
    }
    out = prefix;
    return true;
}

struct GraphSolveOutcome {
    std::uint64_t value = 0;
    std::vector<int> witness;
    bool exact = true;
    bool canonical = false;
    std::uint64_t nodes = 0;
};

GraphSolveOutcome solve_graph(const BitGraph& g, int s, std::uint64_t node_cap,
                              std::uint64_t canonical_cap, bool force0, bool canonical_witness,
                              double time_cap = 0) {
    GraphSolveOutcome out;
    KsFreeSolver solver(g, s, node_cap);
    solver.time_cap = time_cap;
    try {
        solver.solve(force0);
    } catch (const BudgetExhausted&) {
        out.exact = false;
    }
    out.nodes = solver.nodes;
    out.value = solver.best.size();
    out.witness = solver.best;
    if (out.exact && canonical_witness) {
        std::vector<int> canon;
        if (lex_canonicalize(g, s, (int)out.value, canonical_cap, canon)) {
            out.witness = canon;
            out.canonical = true;
        }
    }
    std::sort(out.witness.begin(), out.witness.end());
    return out;
}

BitGraph graph_on(const std::vector<Vertex>& members,
                  const std::function<bool(Vertex, Vertex)>& adjacent) {
    BitGraph g((int)members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (adjacent(members[i], members[j])) g.add_edge((int)i, (int)j);
    return g;
}

SearchResult solve_family(const std::vector<Vertex>& members,
                          const std::function<bool(Vertex, Vertex)>& adjacent, int s,
                          const SearchBudget& budget, bool canonical_witness) {
    if (members.size() > budget.max_vertices)
        throw BudgetError("exact search: universe exceeds max_vertices budget");
    if (members.size() * (members.size() + 1) / 2 > budget.max_pairs)
        throw BudgetError("exact search: pair budget exceeded");
    BitGraph g = graph_on(members, adjacent);
    GraphSolveOutcome out = solve_graph(g, s, budget.max_nodes, budget.canonical_nodes, false,
                                        canonical_witness, budget.time_cap_seconds);
    SearchResult res;
    res.value = out.value;
    res.exact = out.exact;
    res.nodes = out.nodes;
    res.canonical = out.canonical;
    res.witness.reserve(out.witness.size());
    for (int idx : out.witness) res.witness.push_back(members[idx]);
    return res;
}

} // namespace

SearchResult max_ks_free(const CubeParams& params, const SearchBudget& budget,
                         bool canonical_witness) {
    std::uint64_t total = std::uint64_t{1} << params.n;
    if (params.r % 2 == 1 && params.s >= 3) {
        // odd r: H_r(n) is bipartite (edges flip weight parity), no K_3 at all
        SearchResult res;
        res.value = total;
        res.exact = true;
        res.canonical = true;
        if (total <= budget.max_vertices) {
            res.witness.resize(total);
            for (std::uint64_t x = 0; x < total; ++x) res.witness[x] = x;
        }
        return res;
    }
    if (total > budget.max_vertices)
        throw BudgetError("max_ks_free: universe exceeds max_vertices budget");

    // Connected components of the Cayley graph are cosets of one subgroup;
    // XOR translation between them is an isomorphism, so translate-identical
    // components share their optimum value.
    auto flips = masks_of_weight(params.n, params.r);
    std::vector<int> comp(total, -1);
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v0 = 0; v0 < total; ++v0) {
        if (comp[v0] >= 0) continue;
        int id = (int)comps.size();
        std::vector<Vertex> q{v0};
        comp[v0] = id;
        for (std::size_t h = 0; h < q.size(); ++h)
            for (Vertex f : flips) {
                Vertex y = q[h] ^ f;
                if (comp[y] < 0) {
                    comp[y] = id;
                    q.push_back(y);
                }
            }
        std::sort(q.begin(), q.end());
        comps.push_back(std::move(q));
    }

    struct Cached {
        std::uint64_t value;
        std::vector<Vertex> canonical_witness; // in translated-to-zero space
    };
    std::map<std::vector<Vertex>, Cached> cache;

    SearchResult res;
    res.exact = true;
    res.canonical = true;
    std::uint64_t nodes_left = budget.max_nodes;
    for (const auto& members : comps) {
        std::vector<Vertex> canonical(members);
        for (Vertex& x : canonical) x ^= members[0];
        std::sort(canonical.begin(), canonical.end());

        auto it = cache.find(canonical);
        if (it != cache.end() && !canonical_witness) {
            res.value += it->second.value;
            std::vector<Vertex> translated;
            translated.reserve(it->second.canonical_witness.size());
            for (Vertex x : it->second.canonical_witness) translated.push_back(x ^ members[0]);
            std::sort(translated.begin(), translated.end());
            res.witness.insert(res.witness.end(), translated.begin(), translated.end());
            continue;
        }

        BitGraph g = graph_on(members, [&](Vertex a, Vertex b) {
            return std::popcount(a ^ b) == params.r;
        });
        GraphSolveOutcome out;
        if (it != cache.end()) {
            // value known; only the lexicographic witness is recomputed
            out.value = it->second.value;
            out.exact = true;
            std::vector<int> canon;
            if (lex_canonicalize(g, params.s, (int)out.value, budget.canonical_nodes, canon)) {
                out.witness = canon;
                out.canonical = true;
            } else {
                out = solve_graph(g, params.s, nodes_left, budget.canonical_nodes, true, false,
                                  budget.time_cap_seconds);
            }
        } else {
            out = solve_graph(g, params.s, nodes_left, budget.canonical_nodes, true,
                              canonical_witness, budget.time_cap_seconds);
        }
        nodes_left -= std::min(nodes_left, out.nodes);
        res.nodes += out.nodes;
        res.exact = res.exact && out.exact;
        res.canonical = res.canonical && out.canonical;
        res.value += out.value;
        std::vector<Vertex> actual;
        actual.reserve(out.witness.size());
        for (int idx : out.witness) actual.push_back(members[idx]);
        res.witness.insert(res.witness.end(), actual.begin(), actual.end());
        if (it == cache.end()) {
            std::vector<Vertex> canon_space;
            canon_space.reserve(actual.size());
            for (Vertex x : actual) canon_space.push_back(x ^ members[0]);
            cache[canonical] = Cached{out.value, std::move(canon_space)};
        }
    }
    std::sort(res.witness.begin(), res.witness.end());
    if (!canonical_witness) res.canonical = false;
    return res;
}

SearchResult m_s_exact(int n, int k, int l, int s, const SearchBudget& budget,
                       bool canonical_witness) {
    if (n < 0 || n > 62) throw std::invalid_argument("m_s_exact: n out of range");
    if (k < 0 || k > n) throw std::invalid_argument("m_s_exact: k outside 0..n");
    if (s < 2) throw std::invalid_argument("m_s_exact: s must be >= 2");
    // complementation is a graph isomorphism: |A^c n B^c| = n - 2k + |A n B|,
    // so the smaller-uniformity instance is solved instead (witness mapped back)
    if (k > n - k && !canonical_witness) {
        SearchResult res = m_s_exact(n, n - k, n - 2 * k + l, s, budget, false);
        Vertex full = (Vertex{1} << n) - 1;
        for (Vertex& x : res.witness) x ^= full;
        std::sort(res.witness.begin(), res.witness.end());
        return res;
    }
    auto members = masks_of_weight(n, k);
    return solve_family(
        members,
        [&](Vertex a, Vertex b) { return std::popcount(a & b) == l; },
        s, budget, canonical_witness);
}

SearchResult alpha_layer(int n, int k, int t, int s, const SearchBudget& budget) {
    auto members = masks_of_weight(n, k);
    return solve_family(
        members,
        [&](Vertex a, Vertex b) { return std::popcount(a ^ b) == 2 * t; },
        s, budget, false);
}

std::optional<std::vector<Vertex>> contains_ks(const std::vector<Vertex>& set,
                                               const CubeParams& params, int s,
                                               std::uint64_t max_pairs) {
    if ((int)set.size() < s) return std::nullopt;
    std::uint64_t n = set.size();
    if (n * (n - 1) / 2 > max_pairs)
        throw BudgetError("contains_ks: pair budget exceeded");
    BitGraph g = graph_on(set, [&](Vertex a, Vertex b) {
        return hamming_distance_checked(a, b, params.n) == params.r;
    });
    // depth-first clique search over forward candidates
    std::vector<int> clique;
    std::function<bool(Bits&, int)> extend = [&](Bits& cand, int need) -> bool {
        if (need == 0) return true;
        if (popcount_bits(cand) < need) return false;
        for (int i = 0; i < g.w; ++i) {
            std::uint64_t word = cand[i];
            while (word) {
                int b = std::countr_zero(word);
                word &= word - 1;
                int v = i * 64 + b;
                cand[i] &= ~(std::uint64_t{1} << b);
                Bits next(g.w);
                for (int j = 0; j < g.w; ++j) next[j] = cand[j] & g.row(v)[j];
                clique.push_back(v);
                if (extend(next, need - 1)) return true;
                clique.pop_back();
            }
        }
        return false;
    };
    Bits all(g.w, 0);
    for (int v = 0; v < g.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    if (!extend(all, s)) return std::nullopt;
    std::vector<Vertex> witness;
    for (int idx : clique) witness.push_back(set[idx]);
    std::sort(witness.begin(), witness.end());
    return witness;
}

std::optional<std::vector<Vertex>> find_sunflower(const LayerSet& family,
                                                  const SunflowerSpec& spec,
                                                  std::uint64_t max_pairs) {
    if (spec.l < 0 || spec.l > spec.k - 1)
        throw std::invalid_argument("find_sunflower: need 0 <= l <= k-1");
    if (spec.s < 2) throw std::invalid_argument("find_sunflower: s must be >= 2");
    std::uint64_t f = family.members.size();
    if (f * (f + 1) / 2 > max_pairs) throw BudgetError("find_sunflower: pair budget exceeded");
    for (Vertex a : family.members)
        if (std::popcount(a) != spec.k)
            throw std::invalid_argument("find_sunflower: family is not k-uniform");

    // candidate kernels: pairwise intersections of the right size
    // (a sunflower's kernel is the intersection of any two of its petals)
    std::unordered_set<Vertex> kernels;
    for (std::size_t i = 0; i < family.members.size(); ++i)
        for (std::size_t j = i + 1; j < family.members.size(); ++j) {
            Vertex inter = family.members[i] & family.members[j];
            if (std::popcount(inter) == spec.l) kernels.insert(inter);
        }
    std::vector<Vertex> ordered(kernels.begin(), kernels.end());
    std::sort(ordered.begin(), ordered.end());

    for (Vertex kernel : ordered) {
        std::vector<Vertex> petals; // members containing the kernel, reduced to petals
        for (Vertex a : family.members)
            if ((a & kernel) == kernel) petals.push_back(a);
        if ((int)petals.size() < spec.s) continue;
        // pick s sets whose petals (set minus kernel) are pairwise disjoint
        std::vector<Vertex> picked;
        std::function<bool(std::size_t, Vertex)> pick = [&](std::size_t from, Vertex used) -> bool {
            if ((int)picked.size() == spec.s) return true;
            for (std::size_t i = from; i < petals.size(); ++i) {
                Vertex petal = petals[i] & ~kernel;
                if (petal & used) continue;
                picked.push_back(petals[i]);
                if (pick(i + 1, used | petal)) return true;
                picked.pop_back();
            }
            return false;
        };
        if (pick(0, 0)) {
            std::sort(picked.begin(), picked.end());
            return picked;
        }
    }
    return std::nullopt;
}

Rational transfer_upper_bound(int n, int k, int t, int s, std::uint64_t m_value) {
    (void)t;
    (void)s;
    if (k < 0 || k > n) throw std::invalid_argument("transfer_upper_bound: k outside 0..n");
    return Rational(checked_mul(pow2_int128(n), (int128)m_value), binomial(n, k));
}

} // namespace hkfree
