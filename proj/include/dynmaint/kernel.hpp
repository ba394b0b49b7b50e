#pragma once

#include <set>
#include <vector>

#include "graph.hpp"

namespace dynmaint {

struct KernelResult {
    enum class Verdict { Reduced, No };

    std::set<VertexId> forced;   // must be in any cover of size <= k
    DynamicGraph kernel;         // residual graph, no isolated vertices
    std::size_t residual_budget = 0;
    Verdict verdict = Verdict::No;
};

namespace detail {

inline void remove_vertex_with_edges(DynamicGraph& g, VertexId v) {
    std::vector<VertexId> nbrs(g.neighbors(v).begin(), g.neighbors(v).end());
    for (VertexId w : nbrs) g.del_edge(v, w);
    g.del_vertex(v);
}

} // namespace detail

// Buss rule: a vertex of degree above the remaining budget is in every small
// cover. Force such vertices (smallest id first), shrink the budget, drop
// isolated leftovers; refuse when forcing would pass k or the residual graph
// keeps more than budget^2 edges.
inline KernelResult buss_kernelize(const DynamicGraph& g, std::size_t k) {
    KernelResult res;
    DynamicGraph w = g;
    std::size_t budget = k;
    bool no = false;

    for (;;) {
        VertexId pick = -1;
        for (VertexId v : w.vertices())
            if (w.degree(v) > budget) {
                pick = v;
                break;
            }
        if (pick == -1) break;
        if (res.forced.size() >= k) {
            no = true;
            break;
        }
        res.forced.insert(pick);
        detail::remove_vertex_with_edges(w, pick);
        budget = k - res.forced.size();
    }

    for (VertexId v : w.vertices())
        if (w.degree(v) == 0) w.del_vertex(v);

    if (!no && w.num_edges() > budget * budget) no = true;

    res.kernel = std::move(w);
    res.residual_budget = no ? 0 : budget;
    res.verdict = no ? KernelResult::Verdict::No : KernelResult::Verdict::Reduced;
    return res;
}

} // namespace dynmaint
