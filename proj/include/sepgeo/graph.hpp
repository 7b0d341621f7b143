#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sepgeo/common.hpp"

namespace sepgeo {

using Vertex = std::int32_t;

/// Sorted, duplicate-free set of vertex ids over some parent graph.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
        std::sort(ids_.begin(), ids_.end());
        ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    }

    static VertexSet full(Vertex n) {
        std::vector<Vertex> ids(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v) ids[static_cast<std::size_t>(v)] = v;
        VertexSet s;
        s.ids_ = std::move(ids);  // already sorted
        return s;
    }

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    bool contains(Vertex v) const {
        return std::binary_search(ids_.begin(), ids_.end(), v);
    }

    Vertex min_vertex() const { return ids_.empty() ? -1 : ids_.front(); }

    const std::vector<Vertex>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet& o) const { return ids_ == o.ids_; }

    VertexSet set_union(const VertexSet& o) const {
        std::vector<Vertex> out;
        out.reserve(ids_.size() + o.ids_.size());
        std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                       std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }

    VertexSet set_minus(const VertexSet& o) const {
        std::vector<Vertex> out;
        std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                            std::back_inserter(out));
        VertexSet s;
        s.ids_ = std::move(out);
        return s;
    }

    bool intersects(const VertexSet& o) const {
        auto a = ids_.begin();
        auto b = o.ids_.begin();
        while (a != ids_.end() && b != o.ids_.end()) {
            if (*a < *b)
                ++a;
            else if (*b < *a)
                ++b;
            else
                return true;
        }
        return false;
    }

private:
    std::vector<Vertex> ids_;
};

/// Row/column coordinates attached to graphs produced by grid_graph.
/// Induced subgraphs inherit them, which is what the grid-median
/// separator relies on.
struct GridInfo {
    int rows = 0;
    int cols = 0;
    std::vector<int> row;  // per vertex
    std::vector<int> col;
};

/// Simple undirected graph with sorted adjacency lists. Immutable once
/// built; all algorithms treat it as read-only.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::out_of_range("edge endpoint out of range");
            if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u));
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw ParseError("duplicate edge in input");
        }
        g.m_ = edges.size();
        return g;
    }

    Vertex vertex_count() const { return n_; }
    std::size_t edge_count() const { return m_; }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        return adj_[static_cast<std::size_t>(v)];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    bool has_edge(Vertex u, Vertex v) const {
        const auto& nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    bool symmetric() const {
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : neighbors(u))
                if (!has_edge(v, u)) return false;
        return true;
    }

    const std::string& label(Vertex v) const {
        static const std::string empty;
        if (labels_.empty()) return empty;
        return labels_[static_cast<std::size_t>(v)];
    }

    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }
    bool has_labels() const { return !labels_.empty(); }

    const std::optional<GridInfo>& grid() const { return grid_; }
    void set_grid(GridInfo info) { grid_ = std::move(info); }

private:
    Vertex n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::string> labels_;
    std::optional<GridInfo> grid_;
};

/// Edge-list text: one "u v" pair per line, '#' starts a comment, labels are
/// arbitrary tokens compacted to [0,n) in first-seen order. Self-loops and
/// repeated edges are rejected.
inline Graph parse_edge_list(std::istream& in, const std::string& source = "<stream>") {
    std::unordered_map<std::string, Vertex> id_of;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;

    auto intern = [&](const std::string& tok) {
        auto it = id_of.find(tok);
        if (it != id_of.end()) return it->second;
        Vertex id = static_cast<Vertex>(labels.size());
        id_of.emplace(tok, id);
        labels.push_back(tok);
        return id;
    };

    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank or comment-only line
        if (!(ls >> b) || (ls >> extra))
            throw ParseError(source + ":" + std::to_string(lineno) +
                             ": expected exactly two tokens per edge line");
        Vertex u = intern(a);
        Vertex v = intern(b);
        if (u == v)
            throw ParseError(source + ":" + std::to_string(lineno) + ": self-loop on '" + a + "'");
        edges.emplace_back(u, v);
    }

    Graph g;
    try {
        g = Graph::from_edges(static_cast<Vertex>(labels.size()), edges);
    } catch (const ParseError& e) {
        throw ParseError(source + ": " + e.what());
    }
    g.set_labels(std::move(labels));
    return g;
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    return parse_edge_list(in, path);
}

/// rows x cols 4-neighbor lattice, vertex id = r*cols + c.
inline Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be >= 1");
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto id = [cols](int r, int c) { return static_cast<Vertex>(r * cols + c); };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    Graph g = Graph::from_edges(static_cast<Vertex>(rows * cols), edges);
    GridInfo info;
    info.rows = rows;
    info.cols = cols;
    info.row.resize(static_cast<std::size_t>(rows) * cols);
    info.col.resize(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            info.row[static_cast<std::size_t>(id(r, c))] = r;
            info.col[static_cast<std::size_t>(id(r, c))] = c;
        }
    g.set_grid(std::move(info));
    return g;
}

/// Subgraph induced by a vertex subset, with local<->global id maps.
struct InducedSubgraph {
    Graph graph;                    // vertices renumbered to [0, |u|)
    std::vector<Vertex> to_global;  // local id -> parent id

    Vertex global_of(Vertex local) const { return to_global[static_cast<std::size_t>(local)]; }

    VertexSet lift(const VertexSet& local_set) const {
        std::vector<Vertex> out;
        out.reserve(local_set.size());
        for (Vertex v : local_set) out.push_back(global_of(v));
        return VertexSet(std::move(out));
    }
};

inline InducedSubgraph induce(const Graph& g, const VertexSet& u) {
    const Vertex n = g.vertex_count();
    std::vector<Vertex> local_of(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> to_global;
    to_global.reserve(u.size());
    for (Vertex v : u) {
        if (v < 0 || v >= n) throw std::out_of_range("induce: vertex id out of range");
        local_of[static_cast<std::size_t>(v)] = static_cast<Vertex>(to_global.size());
        to_global.push_back(v);
    }

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : u)
        for (Vertex w : g.neighbors(v))
            if (v < w && local_of[static_cast<std::size_t>(w)] >= 0)
                edges.emplace_back(local_of[static_cast<std::size_t>(v)],
                                   local_of[static_cast<std::size_t>(w)]);

    InducedSubgraph sub;
    sub.graph = Graph::from_edges(static_cast<Vertex>(to_global.size()), edges);
    if (g.grid()) {
        GridInfo info;
        info.rows = g.grid()->rows;
        info.cols = g.grid()->cols;
        info.row.reserve(to_global.size());
        info.col.reserve(to_global.size());
        for (Vertex v : to_global) {
            info.row.push_back(g.grid()->row[static_cast<std::size_t>(v)]);
            info.col.push_back(g.grid()->col[static_cast<std::size_t>(v)]);
        }
        sub.graph.set_grid(std::move(info));
    }
    sub.to_global = std::move(to_global);
    return sub;
}

/// Maximal connected vertex sets, each internally sorted; ordered by their
/// smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    const Vertex n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        queue.clear();
        queue.push_back(s);
        seen[static_cast<std::size_t>(s)] = 1;
        std::size_t head = 0;
        while (head < queue.size()) {
            Vertex v = queue[head++];
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    queue.push_back(w);
                }
        }
        comps.emplace_back(queue);
    }
    return comps;
}

}  // namespace sepgeo
