#pragma once

// Linear extension counting. Three independent engines exist on purpose:
// brute permutation filtering, the order-ideal DP, and the wedge convolution
// (with a tree specialization). They are cross-checked against each other in
// the test suite; none is ever defined in terms of another.
//
// Refined counts: counts[r] = number of extensions with exactly r vertices
// placed after the marked vertex. Summing over r recovers the plain count.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bignum.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "order.hpp"

namespace gammacone {

namespace detail {

inline void require_acyclic(const Graph& g, Orientation o) {
    if (!is_acyclic(g, o))
        throw input_error("orientation is cyclic; the chamber set is undefined");
}

inline BigCount u128_to_big(unsigned __int128 v) {
    BigCount hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

// Forward sweep over order ideals in a dense table: f[I] = number of
// extensions of the restriction to I, pushed upward one addable vertex at a
// time. Only genuine ideals ever hold nonzero values.
template <class Count>
Count ideal_dp(int n, const std::vector<VertexSet>& pred) {
    std::vector<Count> f(std::size_t{1} << n, Count{0});
    f[0] = 1;
    const VertexSet all = vfull(n);
    for (VertexSet mask = 0; mask < all; ++mask) {
        if (mask != 0 && f[mask] == Count{0}) continue;
        const Count c = f[mask];
        for_each_vertex(all & ~mask, [&](int v) {
            if ((pred[v] & ~mask) == 0) f[mask | vbit(v)] += c;
        });
    }
    return f[all];
}

}  // namespace detail

// Filters all l! total orders. The reference oracle for everything else.
inline BigCount count_brute(const Graph& g, Orientation o) {
    if (g.n > 10) throw guard_error("brute-force counting is capped at 10 vertices");
    detail::require_acyclic(g, o);
    std::vector<std::pair<int, int>> arcs;
    for (int j = 0; j < g.edge_count(); ++j) arcs.push_back(directed_edge(g, o, j));
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> rank(g.n);
    std::uint64_t total = 0;
    do {
        for (int i = 0; i < g.n; ++i) rank[perm[i]] = i;
        bool ok = true;
        for (auto [t, h] : arcs)
            if (rank[t] > rank[h]) {
                ok = false;
                break;
            }
        total += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return BigCount(total);
}

inline std::vector<BigCount> count_refined_brute(const Graph& g, Orientation o,
                                                 int alpha) {
    if (g.n > 10) throw guard_error("brute-force counting is capped at 10 vertices");
    if (alpha < 0 || alpha >= g.n) throw input_error("vertex out of range");
    detail::require_acyclic(g, o);
    std::vector<std::pair<int, int>> arcs;
    for (int j = 0; j < g.edge_count(); ++j) arcs.push_back(directed_edge(g, o, j));
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> rank(g.n);
    std::vector<std::uint64_t> counts(g.n, 0);
    do {
        for (int i = 0; i < g.n; ++i) rank[perm[i]] = i;
        bool ok = true;
        for (auto [t, h] : arcs)
            if (rank[t] > rank[h]) {
                ok = false;
                break;
            }
        if (ok) ++counts[g.n - 1 - rank[alpha]];
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::vector<BigCount> out(g.n);
    for (int r = 0; r < g.n; ++r) out[r] = counts[r];
    return out;
}

// Order-ideal dynamic program. u64 accumulators are exact up to l = 20
// (20! < 2^63); 21..24 runs in 128 bits (24! < 2^80).
inline BigCount count_ideals_dp(const Graph& g, Orientation o) {
    if (g.n > 24) throw guard_error("ideal DP is capped at 24 vertices");
    detail::require_acyclic(g, o);
    auto pred = in_masks(g, o);
    if (g.n <= 20) return BigCount(detail::ideal_dp<std::uint64_t>(g.n, pred));
    return detail::u128_to_big(detail::ideal_dp<unsigned __int128>(g.n, pred));
}

// Two-sweep refined DP: f counts prefix ideals, h counts completions, and
// gluing them across "alpha goes next" cuts buckets extensions by alpha's
// residual rank. Same ideal lattice as count_ideals_dp, annotated.
inline std::vector<BigCount> count_refined(const Graph& g, Orientation o, int alpha) {
    if (g.n > 20) throw guard_error("refined DP is capped at 20 vertices");
    if (alpha < 0 || alpha >= g.n) throw input_error("vertex out of range");
    detail::require_acyclic(g, o);
    const int n = g.n;
    auto pred = in_masks(g, o);
    const VertexSet all = vfull(n);
    std::vector<std::uint64_t> f(std::size_t{1} << n, 0), h(std::size_t{1} << n, 0);
    f[0] = 1;
    for (VertexSet mask = 0; mask < all; ++mask) {
        if (mask != 0 && f[mask] == 0) continue;
        for_each_vertex(all & ~mask, [&](int v) {
            if ((pred[v] & ~mask) == 0) f[mask | vbit(v)] += f[mask];
        });
    }
    h[all] = 1;
    for (VertexSet mask = all; mask-- > 0;) {
        std::uint64_t acc = 0;
        for_each_vertex(all & ~mask, [&](int v) {
            if ((pred[v] & ~mask) == 0) acc += h[mask | vbit(v)];
        });
        h[mask] = acc;
    }
    std::vector<std::uint64_t> counts(n, 0);
    for (VertexSet mask = 0; mask < all; ++mask) {
        if (mask != 0 && f[mask] == 0) continue;
        if (!vhas(mask, alpha) && (pred[alpha] & ~mask) == 0)
            counts[n - 1 - vcount(mask)] += f[mask] * h[mask | vbit(alpha)];
    }
    std::vector<BigCount> out(n);
    for (int r = 0; r < n; ++r) out[r] = counts[r];
    return out;
}

namespace detail {

// Tree specialization of the wedge convolution, rooted at the marked vertex.
// Each child branch contributes a part vector; parts merge pairwise with
// binomial interleavings. O(l^2) per orientation, exact in u64 for l <= 20.
struct TreeRefinedEngine {
    const Graph& g;
    const BinomialTableU64& binom;
    OriBits bits;
    std::vector<std::uint64_t> scratch;

    TreeRefinedEngine(const Graph& g_, const BinomialTableU64& b)
        : g(g_), binom(b) {}

    // counts[r] for the subtree hanging at v (entered from parent), with v
    // as the marked vertex of that subtree. Returns subtree vector.
    std::vector<std::uint64_t> descend(int v, int parent, OriBits obits) const {
        std::vector<std::uint64_t> acc{1};
        for_each_vertex(g.adj[v] & ~(parent >= 0 ? vbit(parent) : VertexSet{0}),
                        [&](int w) {
                            auto cvec = descend(w, v, obits);
                            int m = static_cast<int>(cvec.size());
                            int j = g.edge_index(v, w);
                            bool v_first;
                            {
                                auto [t, h] = directed_edge(g, Orientation{obits}, j);
                                v_first = (t == v);
                            }
                            // part vector over {v} + branch, indexed by
                            // elements after v inside the part
                            std::vector<std::uint64_t> part(m + 1, 0);
                            if (v_first) {
                                std::uint64_t run = 0;
                                for (int r = 1; r <= m; ++r) {
                                    run += cvec[r - 1];
                                    part[r] = run;
                                }
                            } else {
                                std::uint64_t run = 0;
                                for (int r = m - 1; r >= 0; --r) {
                                    run += cvec[r];
                                    part[r] = run;
                                }
                            }
                            int a = static_cast<int>(acc.size());
                            std::vector<std::uint64_t> merged(a + m, 0);
                            for (int ra = 0; ra < a; ++ra) {
                                if (!acc[ra]) continue;
                                for (int rb = 0; rb <= m; ++rb) {
                                    if (!part[rb]) continue;
                                    merged[ra + rb] +=
                                        acc[ra] * part[rb] * binom.at(ra + rb, ra) *
                                        binom.at((a - 1 - ra) + (m - rb), a - 1 - ra);
                                }
                            }
                            acc = std::move(merged);
                        });
        return acc;
    }
};

}  // namespace detail

// Refined counts on a tree via the wedge convolution rooted at alpha.
inline std::vector<std::uint64_t> tree_refined_u64(const Graph& g, Orientation o,
                                                   int alpha,
                                                   const BinomialTableU64& binom) {
    detail::TreeRefinedEngine eng(g, binom);
    auto vec = eng.descend(alpha, -1, o.bits);
    vec.resize(g.n, 0);
    return vec;
}

inline std::vector<BigCount> count_refined_tree(const Graph& g, Orientation o,
                                                int alpha) {
    if (g.n > 20) throw guard_error("tree convolution engine is capped at 20 vertices");
    if (alpha < 0 || alpha >= g.n) throw input_error("vertex out of range");
    if (classify(g) != GraphClass::tree)
        throw input_error("tree engine needs a tree");
    BinomialTableU64 binom(g.n);
    auto vec = tree_refined_u64(g, o, alpha, binom);
    std::vector<BigCount> out(g.n);
    for (int r = 0; r < g.n; ++r) out[r] = vec[r];
    return out;
}

inline BigCount count_tree(const Graph& g, Orientation o,
                           const BinomialTableU64& binom) {
    auto vec = tree_refined_u64(g, o, 0, binom);
    std::uint64_t total = 0;
    for (auto c : vec) total += c;
    return BigCount(total);
}

// Wedge decomposition: independent parts glued at one shared vertex. The
// glued refined vector is the multinomial convolution of the parts' refined
// vectors; the interleaving binomials count shuffles on each side of the
// shared vertex.
struct WedgePart {
    Graph graph;
    Orientation o;
    int alpha = 0;  // the shared vertex, in this part's numbering
};

inline std::vector<BigCount> wedge_refined(const std::vector<WedgePart>& parts) {
    if (parts.empty()) throw input_error("decomposition needs at least one part");
    std::vector<BigCount> acc{1};
    for (const auto& part : parts) {
        if (part.alpha < 0 || part.alpha >= part.graph.n)
            throw input_error("shared vertex out of range in a part");
        auto part_vec = count_refined(part.graph, part.o, part.alpha);
        int a = static_cast<int>(acc.size());
        int b = static_cast<int>(part_vec.size());
        std::vector<BigCount> merged(a + b - 1, BigCount{0});
        for (int ra = 0; ra < a; ++ra) {
            if (acc[ra] == 0) continue;
            for (int rb = 0; rb < b; ++rb) {
                if (part_vec[rb] == 0) continue;
                merged[ra + rb] += acc[ra] * part_vec[rb] * big_binomial(ra + rb, ra) *
                                   big_binomial((a - 1 - ra) + (b - 1 - rb), a - 1 - ra);
            }
        }
        acc = std::move(merged);
    }
    return acc;
}

inline BigCount count_by_decomposition(const std::vector<WedgePart>& parts) {
    BigCount total = 0;
    for (auto& c : wedge_refined(parts)) total += c;
    return total;
}

// Materialize the wedge: shared vertex becomes 0, parts keep their internal
// order after it. Lets decomposition results be cross-checked by direct
// counting on one graph.
struct GluedWedge {
    Graph graph;
    Orientation o;
    int alpha = 0;
};

inline GluedWedge glue_wedge(const std::vector<WedgePart>& parts) {
    if (parts.empty()) throw input_error("decomposition needs at least one part");
    int n = 1;
    for (const auto& p : parts) n += p.graph.n - 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::pair<int, int>> arcs;
    int base = 1;
    for (const auto& p : parts) {
        auto remap = [&](int v) {
            if (v == p.alpha) return 0;
            return base + v - (v > p.alpha ? 1 : 0);
        };
        for (int j = 0; j < p.graph.edge_count(); ++j) {
            auto [t, h] = directed_edge(p.graph, p.o, j);
            edges.emplace_back(remap(t), remap(h));
            arcs.emplace_back(remap(t), remap(h));
        }
        base += p.graph.n - 1;
    }
    GluedWedge out{Graph(n, edges), Orientation{}, 0};
    out.o = make_orientation(out.graph, arcs);
    return out;
}

// Split a host orientation into wedge parts at a shared vertex: one part per
// component of g minus alpha. Errors if some part would overlap another
// beyond alpha (impossible for components, by construction) or alpha is out
// of range.
inline std::vector<WedgePart> split_at(const Graph& g, Orientation o, int alpha) {
    if (alpha < 0 || alpha >= g.n) throw input_error("vertex out of range");
    std::vector<WedgePart> parts;
    VertexSet seen = vbit(alpha);
    for (int v = 0; v < g.n; ++v) {
        if (vhas(seen, v)) continue;
        VertexSet comp = connected_component(g, vbit(alpha), v);
        seen |= comp;
        VertexSet pset = comp | vbit(alpha);
        auto sub = induced_subgraph(g, pset);
        std::vector<std::pair<int, int>> arcs;
        for (int j = 0; j < g.edge_count(); ++j) {
            auto [t, h] = directed_edge(g, o, j);
            if (vhas(pset, t) && vhas(pset, h))
                arcs.emplace_back(sub.to_new[t], sub.to_new[h]);
        }
        parts.push_back(WedgePart{sub.graph, make_orientation(sub.graph, arcs),
                                  sub.to_new[alpha]});
    }
    if (parts.empty())
        parts.push_back(WedgePart{Graph(1, {}), Orientation{}, 0});
    return parts;
}

struct MonotonicityReport {
    bool maximal = false;
    bool minimal = false;
    std::vector<BigCount> counts;   // indexed by residual rank r
    bool chain_ok = false;          // the applicable inequality chain holds
    bool extreme_zero_ok = false;   // impossible extreme bucket is empty
};

// Residual-rank counts at an extremal vertex move monotonically, and the
// impossible end bucket vanishes unless alpha is isolated.
inline MonotonicityReport monotonicity_check(const Graph& g, Orientation o, int alpha) {
    if (alpha < 0 || alpha >= g.n) throw input_error("vertex out of range");
    detail::require_acyclic(g, o);
    VertexSet in = 0, out = 0;
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [t, h] = directed_edge(g, o, j);
        if (t == alpha) out |= vbit(h);
        if (h == alpha) in |= vbit(t);
    }
    MonotonicityReport rep;
    rep.maximal = (out == 0);
    rep.minimal = (in == 0);
    if (!rep.maximal && !rep.minimal)
        throw input_error("monotonicity check needs an extremal vertex");
    rep.counts = (classify(g) == GraphClass::tree && g.n <= 20)
                     ? count_refined_tree(g, o, alpha)
                     : count_refined(g, o, alpha);
    const int n = g.n;
    bool isolated = (g.adj[alpha] == 0);
    rep.chain_ok = true;
    if (rep.maximal && !rep.minimal) {
        for (int r = 0; r + 1 < n; ++r)
            if (rep.counts[r] < rep.counts[r + 1]) rep.chain_ok = false;
    } else if (rep.minimal && !rep.maximal) {
        for (int r = 0; r + 1 < n; ++r)
            if (rep.counts[r] > rep.counts[r + 1]) rep.chain_ok = false;
    }
    rep.extreme_zero_ok = true;
    if (!isolated) {
        if (rep.maximal && rep.counts[n - 1] != 0) rep.extreme_zero_ok = false;
        if (rep.minimal && rep.counts[0] != 0) rep.extreme_zero_ok = false;
    }
    return rep;
}

struct GammaVector {
    std::vector<std::pair<OriBits, BigCount>> entries;  // sorted by orientation bits
    std::vector<BigCount> multiset;                     // sorted descending
    BigCount max = 0;
    std::vector<OriBits> argmax;                        // ascending bit order
};

// Full spectrum of extension counts over the acyclic orientations.
inline GammaVector gamma_vector(const Graph& g) {
    if (g.n > 24) throw guard_error("gamma vector needs at most 24 vertices");
    GammaVector gv;
    const bool tree = (classify(g) == GraphClass::tree) && g.n <= 20;
    std::optional<BinomialTableU64> binom;
    if (tree) binom.emplace(g.n);
    for_each_acyclic_orientation(g, [&](Orientation o) {
        BigCount sigma = tree ? count_tree(g, o, *binom) : count_ideals_dp(g, o);
        gv.entries.emplace_back(o.bits, std::move(sigma));
    });
    for (auto& [bits, sigma] : gv.entries) {
        gv.multiset.push_back(sigma);
        if (sigma > gv.max) {
            gv.max = sigma;
            gv.argmax.clear();
        }
        if (sigma == gv.max) gv.argmax.push_back(bits);
    }
    std::sort(gv.multiset.begin(), gv.multiset.end(), std::greater<>());
    return gv;
}

}  // namespace gammacone
