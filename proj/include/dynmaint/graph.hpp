#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace dynmaint {

using VertexId = long long;

// Undirected simple graph under single-edit updates. Ordered containers on
// purpose: every iteration order is the ascending id order, which is what
// makes smallest-id tie-breaking rules (and therefore whole runs) replayable.
class DynamicGraph {
public:
    DynamicGraph() = default;

    static DynamicGraph edgeless(VertexId n) {
        DynamicGraph g;
        for (VertexId v = 0; v < n; ++v) g.adj_[v];
        return g;
    }

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }

    bool has_edge(VertexId u, VertexId v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    std::size_t num_vertices() const { return adj_.size(); }
    std::size_t num_edges() const { return num_edges_; }

    std::size_t degree(VertexId v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw UnknownVertex("degree of absent vertex " + std::to_string(v));
        return it->second.size();
    }

    const std::set<VertexId>& neighbors(VertexId v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw UnknownVertex("neighbors of absent vertex " + std::to_string(v));
        return it->second;
    }

    void add_vertex(VertexId v) {
        if (v < 0) throw PreconditionViolation("negative vertex id " + std::to_string(v));
        if (has_vertex(v)) throw PreconditionViolation("add_vertex: " + std::to_string(v) + " already present");
        adj_[v];
    }

    // only isolated vertices can leave (single-edit model)
    void del_vertex(VertexId v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw PreconditionViolation("del_vertex: " + std::to_string(v) + " absent");
        if (!it->second.empty())
            throw PreconditionViolation("del_vertex: " + std::to_string(v) + " not isolated");
        adj_.erase(it);
    }

    void add_edge(VertexId u, VertexId v) {
        if (u == v) throw PreconditionViolation("add_edge: loop at " + std::to_string(u));
        if (!has_vertex(u)) throw PreconditionViolation("add_edge: endpoint " + std::to_string(u) + " absent");
        if (!has_vertex(v)) throw PreconditionViolation("add_edge: endpoint " + std::to_string(v) + " absent");
        if (has_edge(u, v)) throw PreconditionViolation(
            "add_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} already present");
        adj_[u].insert(v);
        adj_[v].insert(u);
        ++num_edges_;
    }

    void del_edge(VertexId u, VertexId v) {
        if (!has_edge(u, v)) throw PreconditionViolation(
            "del_edge: {" + std::to_string(u) + "," + std::to_string(v) + "} absent");
        adj_[u].erase(v);
        adj_[v].erase(u);
        --num_edges_;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(adj_.size());
        for (const auto& [v, nb] : adj_) out.push_back(v);
        return out;
    }

    // ascending (u, v) with u < v
    std::vector<std::pair<VertexId, VertexId>> edges() const {
        std::vector<std::pair<VertexId, VertexId>> out;
        out.reserve(num_edges_);
        for (const auto& [v, nb] : adj_)
            for (VertexId w : nb)
                if (v < w) out.emplace_back(v, w);
        return out;
    }

    std::size_t max_degree() const {
        std::size_t d = 0;
        for (const auto& [v, nb] : adj_)
            if (nb.size() > d) d = nb.size();
        return d;
    }

    bool is_regular(std::size_t r) const {
        for (const auto& [v, nb] : adj_)
            if (nb.size() != r) return false;
        return true;
    }

    friend bool operator==(const DynamicGraph& a, const DynamicGraph& b) {
        return a.adj_ == b.adj_;
    }
    friend bool operator!=(const DynamicGraph& a, const DynamicGraph& b) { return !(a == b); }

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    std::size_t num_edges_ = 0;
};

// Multi-source BFS hop distances. Sources need not be present in the graph
// (a just-deleted vertex is still the site of its own edit); absent sources
// count as distance 0 for themselves and do not expand.
inline std::map<VertexId, std::size_t> bfs_distances(const DynamicGraph& g,
                                                     const std::vector<VertexId>& sources) {
    std::map<VertexId, std::size_t> dist;
    std::queue<VertexId> q;
    for (VertexId s : sources) {
        if (dist.emplace(s, 0).second && g.has_vertex(s)) q.push(s);
    }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        std::size_t dv = dist[v];
        for (VertexId w : g.neighbors(v)) {
            if (dist.emplace(w, dv + 1).second) q.push(w);
        }
    }
    return dist;
}

// Minimum hop count from any source to target; nullopt when unreachable.
// Strict variant: every id must exist (contrast bfs_distances above).
inline std::optional<std::size_t> distance_from(const DynamicGraph& g,
                                                const std::vector<VertexId>& sources,
                                                VertexId target) {
    if (sources.empty()) throw PreconditionViolation("distance_from: no sources");
    for (VertexId s : sources)
        if (!g.has_vertex(s)) throw UnknownVertex("source " + std::to_string(s) + " absent");
    if (!g.has_vertex(target)) throw UnknownVertex("target " + std::to_string(target) + " absent");
    auto dist = bfs_distances(g, sources);
    auto it = dist.find(target);
    if (it == dist.end()) return std::nullopt;
    return it->second;
}

inline std::vector<std::vector<VertexId>> connected_components(const DynamicGraph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::set<VertexId> seen;
    for (VertexId root : g.vertices()) {
        if (seen.count(root)) continue;
        std::vector<VertexId> comp;
        std::queue<VertexId> q;
        q.push(root);
        seen.insert(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v))
                if (seen.insert(w).second) q.push(w);
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

} // namespace dynmaint
