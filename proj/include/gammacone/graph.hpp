#pragma once

// Finite simple graphs on vertex set {0..n-1}, n <= 64, with vertex subsets
// as 64-bit masks. Everything downstream (orientations, component maps,
// subtree bookkeeping) leans on cheap mask algebra.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace gammacone {

using VertexId = int;
using VertexSet = std::uint64_t;

inline constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }
inline constexpr bool vhas(VertexSet s, int v) { return (s >> v) & 1; }
inline int vcount(VertexSet s) { return std::popcount(s); }
inline int vlowest(VertexSet s) { return std::countr_zero(s); }
inline constexpr VertexSet vfull(int n) {
    return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

template <class F>
inline void for_each_vertex(VertexSet s, F&& f) {
    while (s) {
        int v = std::countr_zero(s);
        s &= s - 1;
        f(v);
    }
}

struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // canonical: (min,max), sorted ascending
    std::vector<VertexSet> adj;
    std::vector<std::string> names;  // optional vertex labels, display only

    Graph() = default;

    Graph(int n_, std::vector<std::pair<int, int>> edges_,
          std::vector<std::string> names_ = {})
        : n(n_), edges(std::move(edges_)), names(std::move(names_)) {
        if (n < 1) throw input_error("graph needs at least one vertex");
        if (n > 64) throw guard_error("graphs are capped at 64 vertices");
        for (auto& [u, v] : edges) {
            if (u == v) throw input_error("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n)
                throw input_error("edge endpoint out of range: " + std::to_string(u) +
                                  " " + std::to_string(v));
        }
        std::sort(edges.begin(), edges.end());
        for (size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                throw input_error("duplicate edge " + std::to_string(edges[i].first) +
                                  " " + std::to_string(edges[i].second));
        if (!names.empty() && static_cast<int>(names.size()) != n)
            throw input_error("vertex name list length mismatch");
        adj.assign(n, 0);
        for (auto [u, v] : edges) {
            adj[u] |= vbit(v);
            adj[v] |= vbit(u);
        }
    }

    int edge_count() const { return static_cast<int>(edges.size()); }
    VertexSet vertex_set() const { return vfull(n); }

    int edge_index(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
        if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges.begin());
    }
};

enum class GraphClass { tree, forest, cyclic };

inline const char* to_string(GraphClass c) {
    switch (c) {
        case GraphClass::tree: return "tree";
        case GraphClass::forest: return "forest";
        default: return "cyclic";
    }
}

// Component of the subgraph induced on V \ removed that contains v.
inline VertexSet connected_component(const Graph& g, VertexSet removed, int v) {
    if (v < 0 || v >= g.n) throw input_error("vertex out of range");
    if (vhas(removed, v)) throw input_error("component seed is a removed vertex");
    VertexSet allowed = g.vertex_set() & ~removed;
    VertexSet comp = vbit(v);
    VertexSet frontier = comp;
    while (frontier) {
        VertexSet next = 0;
        for_each_vertex(frontier, [&](int u) { next |= g.adj[u] & allowed; });
        frontier = next & ~comp;
        comp |= frontier;
    }
    return comp;
}

inline bool is_connected(const Graph& g) {
    return connected_component(g, 0, 0) == g.vertex_set();
}

inline GraphClass classify(const Graph& g) {
    // Union-find; a redundant union means a cycle.
    std::vector<int> parent(g.n);
    for (int i = 0; i < g.n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = g.n;
    for (auto [u, v] : g.edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return GraphClass::cyclic;
        parent[ru] = rv;
        --components;
    }
    return components == 1 ? GraphClass::tree : GraphClass::forest;
}

// Edge-list text: optional "vertices <l>" header, one "<u> <v>" pair per line,
// '#' starts a comment, blank lines ignored, LF or CRLF.
inline Graph parse_graph(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    int max_seen = -1;
    int lineno = 0;
    size_t pos = 0;
    bool first_data_line = true;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++lineno;
        if (size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::istringstream ss{std::string(line)};
        std::string tok;
        if (!(ss >> tok)) continue;
        auto fail = [&](const char* why) {
            throw input_error("line " + std::to_string(lineno) + ": " + why);
        };
        if (first_data_line && tok == "vertices") {
            if (!(ss >> declared) || declared < 1) fail("bad vertex count");
            std::string extra;
            if (ss >> extra) fail("trailing tokens after vertex count");
            first_data_line = false;
            continue;
        }
        first_data_line = false;
        int u, v;
        try {
            size_t used = 0;
            u = std::stoi(tok, &used);
            if (used != tok.size()) fail("malformed endpoint");
        } catch (const std::exception&) {
            fail("malformed endpoint");
            throw;  // unreachable
        }
        if (!(ss >> v)) fail("edge line needs two endpoints");
        std::string extra;
        if (ss >> extra) fail("trailing tokens on edge line");
        if (u < 0 || v < 0) fail("negative vertex index");
        if (declared >= 0 && (u >= declared || v >= declared))
            fail("vertex index exceeds declared count");
        max_seen = std::max({max_seen, u, v});
        edges.emplace_back(u, v);
    }
    int n = declared >= 0 ? declared : max_seen + 1;
    if (n < 1) throw input_error("empty graph description");
    return Graph(n, std::move(edges));
}

// path(n):  0-1-...-(n-1), n >= 1
// star(n):  hub at vertex 1, n >= 2 (so star(4) == D(4) as labeled graphs)
// D(n):     path on 0..n-2 plus leaf n-1 at vertex 1, n >= 4
// E(n):     path on 0..n-2 plus leaf n-1 at vertex 2, n >= 4
inline Graph named_family(std::string_view name, int n) {
    std::string key(name);
    for (auto& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    std::vector<std::pair<int, int>> e;
    if (key == "path" || key == "a") {
        if (n < 1) throw input_error("path needs n >= 1");
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    } else if (key == "star") {
        if (n < 2) throw input_error("star needs n >= 2");
        for (int i = 0; i < n; ++i)
            if (i != 1) e.emplace_back(std::min(i, 1), std::max(i, 1));
    } else if (key == "d") {
        if (n < 4) throw input_error("D needs n >= 4");
        for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(1, n - 1);
    } else if (key == "e") {
        if (n < 4) throw input_error("E needs n >= 4");
        for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
        e.emplace_back(2, n - 1);
    } else {
        throw input_error("unknown family '" + key + "' (path|star|D|E)");
    }
    return Graph(n, std::move(e));
}

// Standard Prufer decode; sequence entries in 0..n-1, length n-2.
inline std::vector<std::pair<int, int>> prufer_decode(const std::vector<int>& seq, int n) {
    if (n < 1) throw input_error("prufer_decode needs n >= 1");
    if (static_cast<int>(seq.size()) != std::max(0, n - 2))
        throw input_error("prufer sequence length must be n-2");
    std::vector<std::pair<int, int>> edges;
    if (n == 1) return edges;
    std::vector<int> degree(n, 1);
    for (int s : seq) {
        if (s < 0 || s >= n) throw input_error("prufer entry out of range");
        ++degree[s];
    }
    // Linear-time pointer scan; vertex n-1 is never consumed in the loop,
    // so it anchors the final edge.
    int ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int s : seq) {
        edges.emplace_back(leaf, s);
        if (--degree[s] == 1 && s < ptr) {
            leaf = s;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    edges.emplace_back(leaf, n - 1);
    return edges;
}

// Uniform labeled tree via a uniform Prufer sequence. mt19937_64 plus an
// explicit modulo keeps the stream identical across standard libraries.
inline Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw input_error("random_tree needs n >= 1");
    if (n > 64) throw guard_error("graphs are capped at 64 vertices");
    std::mt19937_64 rng(seed);
    std::vector<int> seq(std::max(0, n - 2));
    for (auto& s : seq) s = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return Graph(n, prufer_decode(seq, n));
}

// Every labeled tree on n vertices, one per Prufer sequence. The encoding
// is a bijection, so exactly n^(n-2) trees come out and none repeats.
template <class F>
inline void for_each_labeled_tree(int n, F&& f) {
    if (n < 1) throw input_error("tree enumeration needs n >= 1");
    if (n > 8) throw guard_error("tree enumeration is capped at 8 vertices");
    std::vector<int> seq(std::max(0, n - 2), 0);
    while (true) {
        f(Graph(n, prufer_decode(seq, n)));
        std::size_t i = 0;
        while (i < seq.size() && seq[i] == n - 1) seq[i++] = 0;
        if (i == seq.size()) break;
        ++seq[i];
    }
}

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_old;  // new id -> old id, increasing
    std::vector<int> to_new;  // old id -> new id, -1 outside
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    InducedSubgraph out;
    out.to_new.assign(g.n, -1);
    for_each_vertex(s, [&](int v) {
        out.to_new[v] = static_cast<int>(out.to_old.size());
        out.to_old.push_back(v);
    });
    if (out.to_old.empty()) throw input_error("induced subgraph needs a nonempty set");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (vhas(s, u) && vhas(s, v)) e.emplace_back(out.to_new[u], out.to_new[v]);
    out.graph = Graph(static_cast<int>(out.to_old.size()), std::move(e));
    return out;
}

}  // namespace gammacone
