#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "kernel.hpp"
#include "solution.hpp"

namespace dynmaint {

namespace detail {

inline std::size_t greedy_matching_size(const DynamicGraph& g) {
    std::set<VertexId> used;
    std::size_t m = 0;
    for (auto [u, v] : g.edges())
        if (!used.count(u) && !used.count(v)) {
            used.insert(u);
            used.insert(v);
            ++m;
        }
    return m;
}

struct VcSearch {
    std::size_t node_cap;
    std::size_t nodes = 0;

    // cover of size <= k, or nothing; kernelize then branch on the
    // max-degree vertex (in-cover branch first, smaller id breaks ties)
    std::optional<std::set<VertexId>> decide(const DynamicGraph& g, std::size_t k) {
        if (++nodes > node_cap) throw BudgetExceeded("vc_exact: node budget exhausted");
        KernelResult kern = buss_kernelize(g, k);
        if (kern.verdict == KernelResult::Verdict::No) return std::nullopt;
        const DynamicGraph& ker = kern.kernel;
        const std::size_t budget = kern.residual_budget;
        if (ker.num_edges() == 0) return kern.forced;
        if (budget == 0 || greedy_matching_size(ker) > budget) return std::nullopt;

        VertexId pick = -1;
        std::size_t dmax = 0;
        for (VertexId v : ker.vertices()) {
            std::size_t d = ker.degree(v);
            if (d > dmax) {
                dmax = d;
                pick = v;
            }
        }

        DynamicGraph g1 = ker;
        remove_vertex_with_edges(g1, pick);
        if (auto sub = decide(g1, budget - 1)) {
            sub->insert(kern.forced.begin(), kern.forced.end());
            sub->insert(pick);
            return sub;
        }

        std::vector<VertexId> nbrs(ker.neighbors(pick).begin(), ker.neighbors(pick).end());
        if (nbrs.size() <= budget) {
            DynamicGraph g2 = ker;
            for (VertexId w : nbrs) remove_vertex_with_edges(g2, w);
            g2.del_vertex(pick);
            if (auto sub = decide(g2, budget - nbrs.size())) {
                sub->insert(kern.forced.begin(), kern.forced.end());
                sub->insert(nbrs.begin(), nbrs.end());
                return sub;
            }
        }
        return std::nullopt;
    }
};

} // namespace detail

// Minimum vertex cover by budget sweep: try k = (matching lower bound),
// k+1, ... until the kernel-plus-branching decision succeeds. The first
// success is optimal, so the sweep never overshoots.
inline SolutionSnapshot vc_exact(const DynamicGraph& g, std::size_t node_cap = default_node_cap) {
    detail::VcSearch search{node_cap};
    for (std::size_t k = detail::greedy_matching_size(g); k <= g.num_vertices(); ++k) {
        if (auto cover = search.decide(g, k)) {
            SolutionSnapshot s;
            s.problem = Problem::vertex_cover;
            s.members = std::move(*cover);
            return s;
        }
    }
    throw CorruptState("vc_exact: no cover found up to |V|"); // taking all vertices always covers
}

inline bool fpt_vc_decide(const DynamicGraph& g, std::size_t k,
                          std::size_t node_cap = default_node_cap) {
    KernelResult kern = buss_kernelize(g, k);
    if (kern.verdict == KernelResult::Verdict::No) return false;
    return vc_exact(kern.kernel, node_cap).size() <= kern.residual_budget;
}

namespace detail {

// center of a star component, or -1 when the component is not a star
inline VertexId star_center(const DynamicGraph& g, const std::vector<VertexId>& comp) {
    if (comp.size() == 1) return comp[0];
    VertexId center = -1;
    for (VertexId v : comp)
        if (g.degree(v) == comp.size() - 1) {
            center = v;
            break;
        }
    if (center == -1) return -1;
    for (VertexId v : comp)
        if (v != center && g.degree(v) != 1) return -1;
    return center;
}

struct DsSearch {
    const DynamicGraph& g;
    std::vector<VertexId> verts;
    std::size_t node_cap;
    std::size_t nodes = 0;
    std::set<VertexId> best;

    void rec(std::set<VertexId>& chosen, std::set<VertexId>& banned) {
        if (++nodes > node_cap) throw BudgetExceeded("ds_exact: node budget exhausted");
        std::vector<VertexId> undom;
        for (VertexId v : verts) {
            if (chosen.count(v)) continue;
            bool dominated = false;
            for (VertexId w : g.neighbors(v))
                if (chosen.count(w)) {
                    dominated = true;
                    break;
                }
            if (!dominated) undom.push_back(v);
        }
        if (undom.empty()) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        if (chosen.size() + 1 >= best.size()) return;

        // most-constrained undominated vertex: fewest allowed dominators
        VertexId u = -1;
        std::size_t fewest = SIZE_MAX;
        for (VertexId v : undom) {
            std::size_t options = banned.count(v) ? 0 : 1;
            for (VertexId w : g.neighbors(v))
                if (!banned.count(w)) ++options;
            if (options < fewest) {
                fewest = options;
                u = v;
            }
        }
        if (fewest == 0) return; // u cannot be dominated any more

        std::vector<VertexId> cands;
        if (!banned.count(u)) cands.push_back(u);
        for (VertexId w : g.neighbors(u))
            if (!banned.count(w)) cands.push_back(w);
        std::sort(cands.begin(), cands.end());

        // disjoint branches: trying c bans it for the later branches
        for (VertexId c : cands) {
            chosen.insert(c);
            rec(chosen, banned);
            chosen.erase(c);
            banned.insert(c);
        }
        for (VertexId c : cands) banned.erase(c);
    }
};

} // namespace detail

// True when every connected component is a star (or a lone vertex); such
// graphs have one dominating center per component, at any scale.
inline bool is_union_of_stars(const DynamicGraph& g) {
    for (const auto& comp : connected_components(g))
        if (detail::star_center(g, comp) == -1) return false;
    return true;
}

// Minimum dominating set. Star-shaped components are answered analytically
// (one center each); everything else gets a pruned complete search, run per
// component.
inline SolutionSnapshot ds_exact(const DynamicGraph& g, std::size_t node_cap = default_node_cap) {
    SolutionSnapshot s;
    s.problem = Problem::dominating_set;
    for (const auto& comp : connected_components(g)) {
        VertexId center = detail::star_center(g, comp);
        if (center != -1) {
            s.members.insert(center);
            continue;
        }
        detail::DsSearch search{g, comp, node_cap, 0, {}};
        search.best.insert(comp.begin(), comp.end()); // whole component always dominates
        std::set<VertexId> chosen, banned;
        search.rec(chosen, banned);
        s.members.insert(search.best.begin(), search.best.end());
    }
    return s;
}

// Oracle for star-family runs: component count, valid at any n. Refuses
// anything outside the family rather than guessing.
inline std::size_t analytic_star_optimum(const DynamicGraph& g) {
    auto comps = connected_components(g);
    for (const auto& comp : comps)
        if (detail::star_center(g, comp) == -1)
            throw UnsupportedProblem("analytic star oracle on a non-star component");
    return comps.size();
}

} // namespace dynmaint
