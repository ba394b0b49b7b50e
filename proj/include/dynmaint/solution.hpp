#pragma once

#include <set>
#include <string>

#include "errors.hpp"
#include "graph.hpp"

namespace dynmaint {

enum class Problem { vertex_cover, dominating_set, custom };

inline std::string to_string(Problem p) {
    switch (p) {
        case Problem::vertex_cover: return "vertex-cover";
        case Problem::dominating_set: return "dominating-set";
        case Problem::custom: return "custom";
    }
    return "?";
}

struct SolutionSnapshot {
    Problem problem = Problem::custom;
    std::set<VertexId> members;

    std::size_t size() const { return members.size(); }
};

inline bool is_vertex_cover(const DynamicGraph& g, const std::set<VertexId>& members) {
    for (auto [u, v] : g.edges())
        if (!members.count(u) && !members.count(v)) return false;
    return true;
}

inline bool is_dominating_set(const DynamicGraph& g, const std::set<VertexId>& members) {
    for (VertexId v : g.vertices()) {
        if (members.count(v)) continue;
        bool dominated = false;
        for (VertexId w : g.neighbors(v)) {
            if (members.count(w)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

// members must also live inside the graph
inline bool members_subset_of_vertices(const DynamicGraph& g, const std::set<VertexId>& members) {
    for (VertexId v : members)
        if (!g.has_vertex(v)) return false;
    return true;
}

inline bool is_valid_solution(const DynamicGraph& g, const SolutionSnapshot& s) {
    if (!members_subset_of_vertices(g, s.members)) return false;
    switch (s.problem) {
        case Problem::vertex_cover: return is_vertex_cover(g, s.members);
        case Problem::dominating_set: return is_dominating_set(g, s.members);
        case Problem::custom:
            throw UnsupportedProblem("no validator for custom problem tag");
    }
    return false;
}

} // namespace dynmaint
