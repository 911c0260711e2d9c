#pragma once

// Edge orientations and the partial orders they generate. An orientation is
// a bit per canonical edge: bit j = 0 means the lower-numbered endpoint of
// edge j precedes the higher-numbered one. Cyclic orientations are
// representable; everything order-theoretic checks acyclicity first.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace gammacone {

using OriBits = std::uint64_t;

struct Orientation {
    OriBits bits = 0;
    friend bool operator==(const Orientation&, const Orientation&) = default;
};

inline void check_orientable(const Graph& g) {
    if (g.edge_count() > 64)
        throw guard_error("orientations are capped at 64 edges");
}

inline Orientation make_orientation(const Graph& g, OriBits bits) {
    check_orientable(g);
    if (g.edge_count() < 64 && (bits >> g.edge_count()) != 0)
        throw input_error("orientation bits exceed edge count");
    return Orientation{bits};
}

// Every edge must appear exactly once as an ordered (tail, head) pair.
inline Orientation make_orientation(const Graph& g,
                                    const std::vector<std::pair<int, int>>& directed) {
    check_orientable(g);
    if (static_cast<int>(directed.size()) != g.edge_count())
        throw input_error("orientation must direct every edge exactly once");
    OriBits bits = 0;
    std::vector<bool> seen(directed.size(), false);
    for (auto [tail, head] : directed) {
        int j = g.edge_index(tail, head);
        if (j < 0) throw input_error("directed pair is not an edge of the graph");
        if (seen[j]) throw input_error("edge directed twice");
        seen[j] = true;
        if (tail > head) bits |= OriBits{1} << j;
    }
    return Orientation{bits};
}

inline std::pair<int, int> directed_edge(const Graph& g, Orientation o, int j) {
    auto [a, b] = g.edges[j];
    return (o.bits >> j) & 1 ? std::make_pair(b, a) : std::make_pair(a, b);
}

inline Orientation reverse(const Graph& g, Orientation o) {
    int e = g.edge_count();
    OriBits mask = e >= 64 ? ~OriBits{0} : (OriBits{1} << e) - 1;
    return Orientation{o.bits ^ mask};
}

// In/out neighbor masks under o.
inline std::vector<VertexSet> out_masks(const Graph& g, Orientation o) {
    std::vector<VertexSet> out(g.n, 0);
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [t, h] = directed_edge(g, o, j);
        out[t] |= vbit(h);
    }
    return out;
}

inline std::vector<VertexSet> in_masks(const Graph& g, Orientation o) {
    std::vector<VertexSet> in(g.n, 0);
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [t, h] = directed_edge(g, o, j);
        in[h] |= vbit(t);
    }
    return in;
}

// Kahn peeling; empty result signals a directed cycle.
inline std::vector<int> topo_order(const Graph& g, Orientation o) {
    auto in = in_masks(g, o);
    VertexSet placed = 0;
    std::vector<int> order;
    order.reserve(g.n);
    for (int step = 0; step < g.n; ++step) {
        int pick = -1;
        for (int v = 0; v < g.n; ++v)
            if (!vhas(placed, v) && (in[v] & ~placed) == 0) {
                pick = v;
                break;
            }
        if (pick < 0) return {};
        placed |= vbit(pick);
        order.push_back(pick);
    }
    return order;
}

inline bool is_acyclic(const Graph& g, Orientation o) {
    return !topo_order(g, o).empty();
}

template <class F>
inline void for_each_acyclic_orientation(const Graph& g, F&& f) {
    if (g.edge_count() > 24)
        throw guard_error("orientation enumeration is capped at 24 edges");
    OriBits end = OriBits{1} << g.edge_count();
    for (OriBits bits = 0; bits < end; ++bits) {
        Orientation o{bits};
        if (is_acyclic(g, o)) f(o);
    }
}

inline std::vector<Orientation> enumerate_acyclic_orientations(const Graph& g) {
    std::vector<Orientation> out;
    for_each_acyclic_orientation(g, [&](Orientation o) { out.push_back(o); });
    return out;
}

// Strict order closure plus covering pairs. Reduction is closure-then-prune:
// a pair survives iff nothing sits strictly between its endpoints.
struct Poset {
    int n = 0;
    std::vector<VertexSet> above;  // above[v] = { w : v < w }
    std::vector<VertexSet> below;
    std::vector<std::pair<int, int>> hasse;  // (lower, upper), sorted
};

inline Poset poset_from_directed_edges(int n,
                                       const std::vector<std::pair<int, int>>& arcs) {
    Poset p;
    p.n = n;
    p.above.assign(n, 0);
    p.below.assign(n, 0);
    std::vector<VertexSet> succ(n, 0);
    std::vector<int> indeg(n, 0);
    for (auto [t, h] : arcs) {
        if (t < 0 || t >= n || h < 0 || h >= n || t == h)
            throw input_error("bad arc in poset construction");
        if (!vhas(succ[t], h)) {
            succ[t] |= vbit(h);
            ++indeg[h];
        }
    }
    // Kahn order, then closure by sweeping it backwards.
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> indeg_work = indeg;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg_work[v] == 0) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        order.push_back(v);
        for_each_vertex(succ[v], [&](int w) {
            if (--indeg_work[w] == 0) queue.push_back(w);
        });
    }
    if (static_cast<int>(order.size()) != n)
        throw input_error("directed edges contain a cycle");
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        for_each_vertex(succ[v], [&](int w) { p.above[v] |= vbit(w) | p.above[w]; });
    }
    for (int v = 0; v < n; ++v)
        for_each_vertex(p.above[v], [&](int w) { p.below[w] |= vbit(v); });
    for (int v = 0; v < n; ++v)
        for_each_vertex(p.above[v], [&](int w) {
            if ((p.above[v] & p.below[w]) == 0) p.hasse.emplace_back(v, w);
        });
    std::sort(p.hasse.begin(), p.hasse.end());
    return p;
}

inline Poset to_poset(const Graph& g, Orientation o) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(g.edge_count());
    for (int j = 0; j < g.edge_count(); ++j) arcs.push_back(directed_edge(g, o, j));
    return poset_from_directed_edges(g.n, arcs);
}

struct ReductionProperties {
    bool idempotent = false;          // reducing the hasse arcs returns them unchanged
    bool closure_preserved = false;   // hasse arcs regenerate the full closure
};

inline ReductionProperties hasse_reduction_properties(const Poset& p) {
    Poset again = poset_from_directed_edges(p.n, p.hasse);
    ReductionProperties r;
    r.idempotent = (again.hasse == p.hasse);
    r.closure_preserved = (again.above == p.above);
    return r;
}

struct PrincipalDecomposition {
    VertexSet pi1 = 0;  // the side containing vertex 0
    VertexSet pi2 = 0;
};

inline PrincipalDecomposition principal_decomposition(const Graph& g) {
    if (!is_connected(g))
        throw input_error("principal decomposition needs a connected graph");
    std::vector<int> color(g.n, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for_each_vertex(g.adj[v], [&](int w) {
            if (color[w] < 0) {
                color[w] = 1 - color[v];
                stack.push_back(w);
            } else if (color[w] == color[v]) {
                throw input_error("graph has an odd cycle; no principal decomposition");
            }
        });
    }
    PrincipalDecomposition d;
    for (int v = 0; v < g.n; ++v) (color[v] == 0 ? d.pi1 : d.pi2) |= vbit(v);
    return d;
}

inline PrincipalDecomposition swapped(const PrincipalDecomposition& d) {
    return PrincipalDecomposition{d.pi2, d.pi1};
}

// Every edge directed from the pi1 endpoint to the pi2 endpoint.
inline Orientation principal_orientation(const Graph& g,
                                         const PrincipalDecomposition& d) {
    check_orientable(g);
    if ((d.pi1 & d.pi2) != 0 || (d.pi1 | d.pi2) != g.vertex_set())
        throw input_error("decomposition does not partition the vertex set");
    OriBits bits = 0;
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [a, b] = g.edges[j];
        bool a1 = vhas(d.pi1, a), b1 = vhas(d.pi1, b);
        if (a1 == b1) throw input_error("decomposition side contains an edge");
        if (b1) bits |= OriBits{1} << j;
    }
    return Orientation{bits};
}

using LinearOrder = std::vector<int>;  // order[i] = vertex in position i

inline bool is_permutation_of_vertices(const Graph& g, const LinearOrder& c) {
    if (static_cast<int>(c.size()) != g.n) return false;
    VertexSet seen = 0;
    for (int v : c) {
        if (v < 0 || v >= g.n || vhas(seen, v)) return false;
        seen |= vbit(v);
    }
    return true;
}

inline bool is_linear_extension(const Graph& g, Orientation o, const LinearOrder& c) {
    if (!is_permutation_of_vertices(g, c))
        throw input_error("linear order must be a permutation of the vertices");
    std::vector<int> rank(g.n);
    for (int i = 0; i < g.n; ++i) rank[c[i]] = i;
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [t, h] = directed_edge(g, o, j);
        if (rank[t] > rank[h]) return false;
    }
    return true;
}

// Emits extensions in lexicographic order of the vertex sequence.
template <class F>
inline void for_each_linear_extension(const Graph& g, Orientation o, F&& f) {
    auto in = in_masks(g, o);
    LinearOrder prefix;
    prefix.reserve(g.n);
    VertexSet placed = 0;
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(prefix.size()) == g.n) {
            f(static_cast<const LinearOrder&>(prefix));
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (vhas(placed, v) || (in[v] & ~placed) != 0) continue;
            placed |= vbit(v);
            prefix.push_back(v);
            self(self);
            prefix.pop_back();
            placed &= ~vbit(v);
        }
    };
    rec(rec);
}

// One flip toward the principal pair: reverse the orientation on the union of
// alpha and its incoming branches. Requires alpha to have both an in-edge and
// an out-edge; on a tree this strictly increases the extension count.
inline Orientation flip_to_principal(const Graph& g, Orientation o, int alpha) {
    if (alpha < 0 || alpha >= g.n) throw input_error("vertex out of range");
    VertexSet in = 0, out = 0;
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [t, h] = directed_edge(g, o, j);
        if (t == alpha) out |= vbit(h);
        if (h == alpha) in |= vbit(t);
    }
    if (in == 0 || out == 0)
        throw input_error("flip vertex needs both an in-edge and an out-edge");
    VertexSet lower = vbit(alpha);
    for_each_vertex(in, [&](int w) { lower |= connected_component(g, vbit(alpha), w); });
    OriBits bits = o.bits;
    for (int j = 0; j < g.edge_count(); ++j) {
        auto [a, b] = g.edges[j];
        if (vhas(lower, a) && vhas(lower, b)) bits ^= OriBits{1} << j;
    }
    return Orientation{bits};
}

// Serialized with edge 0 first after the prefix: "0b" then one char per edge,
// '0' = lower endpoint precedes.
inline std::string to_bitstring(const Graph& g, Orientation o) {
    std::string s = "0b";
    for (int j = 0; j < g.edge_count(); ++j) s += ((o.bits >> j) & 1) ? '1' : '0';
    return s;
}

inline Orientation orientation_from_bitstring(const Graph& g, std::string_view s) {
    if (s.substr(0, 2) == "0b") s.remove_prefix(2);
    if (static_cast<int>(s.size()) != g.edge_count())
        throw input_error("orientation bitstring needs one character per edge");
    OriBits bits = 0;
    for (int j = 0; j < g.edge_count(); ++j) {
        if (s[j] == '1')
            bits |= OriBits{1} << j;
        else if (s[j] != '0')
            throw input_error("orientation bitstring must be over {0,1}");
    }
    return make_orientation(g, bits);
}

}  // namespace gammacone
