#pragma once

// JSON and table renderings of the library's reports. Counts are emitted as
// decimal strings, so output stays exact at any size, and object keys keep
// insertion order, so identical inputs give byte-identical output.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "count.hpp"
#include "order.hpp"
#include "principal.hpp"
#include "series.hpp"

namespace gammacone {

using Json = nlohmann::ordered_json;

inline Json vertices_json(VertexSet s) {
    Json arr = Json::array();
    for_each_vertex(s, [&](int v) { arr.push_back(v); });
    return arr;
}

inline std::string vertex_set_text(VertexSet s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for_each_vertex(s, [&](int v) {
        if (!first) out << ",";
        first = false;
        out << v;
    });
    out << "}";
    return out.str();
}

inline Json gamma_vector_json(const Graph& g, const GammaVector& gv) {
    Json j;
    Json entries = Json::array();
    for (const auto& [bits, count] : gv.entries) {
        Json e;
        e["orientation_bits"] = to_bitstring(g, Orientation{bits});
        e["sigma"] = decimal(count);
        entries.push_back(std::move(e));
    }
    j["orientations"] = std::move(entries);
    Json summary;
    summary["max"] = decimal(gv.max);
    Json arg = Json::array();
    for (OriBits b : gv.argmax) arg.push_back(to_bitstring(g, Orientation{b}));
    summary["argmax_bits"] = std::move(arg);
    j["summary"] = std::move(summary);
    return j;
}

// Multiset in the halved form "2(6,2,2,2)" when counts pair up under
// orientation reversal; plain "(...)" otherwise (edgeless graphs).
inline std::string gamma_vector_text(const GammaVector& gv) {
    bool paired = gv.multiset.size() % 2 == 0;
    for (std::size_t i = 0; paired && i < gv.multiset.size(); i += 2)
        paired = (gv.multiset[i] == gv.multiset[i + 1]);
    std::ostringstream out;
    if (paired) out << "2";
    out << "(";
    for (std::size_t i = 0; i < gv.multiset.size(); i += paired ? 2 : 1) {
        if (i) out << ",";
        out << decimal(gv.multiset[i]);
    }
    out << ")";
    return out.str();
}

inline Json hasse_json(const Poset& p) {
    Json arr = Json::array();
    for (const auto& [lo, hi] : p.hasse) arr.push_back(Json::array({lo, hi}));
    return arr;
}

inline Json block_report_json(const BlockReport& rep) {
    Json j;
    j["pi1"] = vertices_json(rep.pi1);
    j["pi2"] = vertices_json(rep.pi2);
    Json blocks = Json::array();
    for (const auto& b : rep.blocks) {
        Json bj;
        bj["root"] = b.lifted.root;
        Json edges = Json::array();
        for_each_vertex(b.lifted.verts, [&](int v) {
            if (b.lifted.parent[v] >= 0)
                edges.push_back(Json::array({v, b.lifted.parent[v]}));
        });
        bj["parent_edges"] = std::move(edges);
        bj["denominators"] = b.denominators;
        bj["count"] = decimal(b.count);
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    j["total"] = decimal(rep.total);
    return j;
}

inline std::string block_report_text(const BlockReport& rep) {
    std::ostringstream out;
    out << "pi1 = " << vertex_set_text(rep.pi1)
        << "  pi2 = " << vertex_set_text(rep.pi2) << "\n";
    int idx = 0;
    for (const auto& b : rep.blocks) {
        out << "block " << idx++ << ": root " << b.lifted.root << ", edges";
        for_each_vertex(b.lifted.verts, [&](int v) {
            if (b.lifted.parent[v] >= 0) out << " " << v << "->" << b.lifted.parent[v];
        });
        out << ", denominators";
        for (int d : b.denominators) out << " " << d;
        out << ", count " << decimal(b.count) << "\n";
    }
    out << "total " << decimal(rep.total) << " over " << rep.blocks.size()
        << " blocks\n";
    return out.str();
}

inline Json series_rows_json(const std::vector<SeriesRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json e;
        e["n"] = r.n;
        e["direct"] = decimal(r.direct);
        e["series"] = r.series.str();
        e["match"] = r.match;
        arr.push_back(std::move(e));
    }
    return arr;
}

inline std::string series_table_text(const std::string& title,
                                     const std::vector<SeriesRow>& rows) {
    std::ostringstream out;
    out << title << "\n";
    out << "n\tdirect\tseries\tmatch\n";
    for (const auto& r : rows)
        out << r.n << "\t" << decimal(r.direct) << "\t" << r.series.str() << "\t"
            << (r.match ? "yes" : "no") << "\n";
    return out.str();
}

inline std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace gammacone
