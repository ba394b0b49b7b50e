#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace dynmaint {

// One editing-distance-1 step. Edge endpoints are kept normalized u < v so
// scripts have a single spelling and replays/diffs compare bytewise.
struct EditOp {
    enum class Kind { add_edge, del_edge, add_vertex, del_vertex };

    Kind kind;
    VertexId u = 0;
    VertexId v = 0;

    static EditOp add_edge_op(VertexId a, VertexId b) {
        if (a == b) throw PreconditionViolation("edge op with equal endpoints " + std::to_string(a));
        return EditOp{Kind::add_edge, std::min(a, b), std::max(a, b)};
    }
    static EditOp del_edge_op(VertexId a, VertexId b) {
        if (a == b) throw PreconditionViolation("edge op with equal endpoints " + std::to_string(a));
        return EditOp{Kind::del_edge, std::min(a, b), std::max(a, b)};
    }
    static EditOp add_vertex_op(VertexId a) { return EditOp{Kind::add_vertex, a, a}; }
    static EditOp del_vertex_op(VertexId a) { return EditOp{Kind::del_vertex, a, a}; }

    bool is_edge_op() const { return kind == Kind::add_edge || kind == Kind::del_edge; }

    // vertices whose surroundings the edit disturbs (the "edit site")
    std::vector<VertexId> endpoints() const {
        if (is_edge_op()) return {u, v};
        return {u};
    }

    friend bool operator==(const EditOp& a, const EditOp& b) {
        return a.kind == b.kind && a.u == b.u && a.v == b.v;
    }
};

struct EditScript {
    VertexId initial_n = 0; // |V(G_0)|; scripts start from the edgeless graph on ids 0..initial_n-1
    std::vector<EditOp> ops;

    std::size_t size() const { return ops.size(); }
    bool empty() const { return ops.empty(); }
};

inline std::string to_string(EditOp::Kind k) {
    switch (k) {
        case EditOp::Kind::add_edge: return "AE";
        case EditOp::Kind::del_edge: return "DE";
        case EditOp::Kind::add_vertex: return "AV";
        case EditOp::Kind::del_vertex: return "DV";
    }
    return "??";
}

inline std::string to_string(const EditOp& op) {
    if (op.is_edge_op())
        return to_string(op.kind) + " " + std::to_string(op.u) + " " + std::to_string(op.v);
    return to_string(op.kind) + " " + std::to_string(op.u);
}

inline bool precondition_holds(const DynamicGraph& g, const EditOp& op) {
    switch (op.kind) {
        case EditOp::Kind::add_edge:
            return op.u != op.v && g.has_vertex(op.u) && g.has_vertex(op.v) && !g.has_edge(op.u, op.v);
        case EditOp::Kind::del_edge:
            return g.has_edge(op.u, op.v);
        case EditOp::Kind::add_vertex:
            return op.u >= 0 && !g.has_vertex(op.u);
        case EditOp::Kind::del_vertex:
            return g.has_vertex(op.u) && g.degree(op.u) == 0;
    }
    return false;
}

inline void apply_edit(DynamicGraph& g, const EditOp& op) {
    switch (op.kind) {
        case EditOp::Kind::add_edge: g.add_edge(op.u, op.v); return;
        case EditOp::Kind::del_edge: g.del_edge(op.u, op.v); return;
        case EditOp::Kind::add_vertex: g.add_vertex(op.u); return;
        case EditOp::Kind::del_vertex: g.del_vertex(op.u); return;
    }
}

inline EditOp inverse_of(const EditOp& op) {
    switch (op.kind) {
        case EditOp::Kind::add_edge: return EditOp{EditOp::Kind::del_edge, op.u, op.v};
        case EditOp::Kind::del_edge: return EditOp{EditOp::Kind::add_edge, op.u, op.v};
        case EditOp::Kind::add_vertex: return EditOp{EditOp::Kind::del_vertex, op.u, op.v};
        case EditOp::Kind::del_vertex: return EditOp{EditOp::Kind::add_vertex, op.u, op.v};
    }
    throw CorruptState("inverse_of: bad op kind");
}

// Replay a target graph from nothing: all AddEdge ops in a seed-shuffled
// order, starting from the edgeless graph on initial_n = |V(target)|
// vertices. Target ids are mapped to 0..n-1 in ascending original order, so
// targets already labeled 0..n-1 replay to an identical graph.
inline EditScript build_script_edge_by_edge(const DynamicGraph& target, std::uint64_t order_seed) {
    std::map<VertexId, VertexId> relabel;
    VertexId next = 0;
    for (VertexId v : target.vertices()) relabel[v] = next++;

    auto es = target.edges();
    Rng rng(order_seed);
    rng.shuffle(es);

    EditScript script;
    script.initial_n = next;
    script.ops.reserve(es.size());
    for (auto [u, v] : es) script.ops.push_back(EditOp::add_edge_op(relabel[u], relabel[v]));
    return script;
}

// Random single-edge churn on vertex set 0..n-1, starting edgeless. Each
// step draws AddEdge with probability p_add (else DelEdge) and picks
// uniformly inside that pool, falling back to the other pool when the chosen
// one is empty, so the script always has exactly `steps` ops.
inline EditScript churn_script(VertexId n, std::size_t steps, double p_add, std::uint64_t seed) {
    if (n < 0 || p_add < 0.0 || p_add > 1.0)
        throw PreconditionViolation("churn_script: bad parameters");
    if (steps > 0 && n < 2)
        throw Degenerate("churn needs at least 2 vertices, have " + std::to_string(n));

    std::vector<std::pair<VertexId, VertexId>> present;
    std::vector<std::pair<VertexId, VertexId>> absent;
    for (VertexId i = 0; i < n; ++i)
        for (VertexId j = i + 1; j < n; ++j) absent.emplace_back(i, j);

    Rng rng(seed);
    // 53-bit threshold comparison keeps the Bernoulli draw exact for p in {0,1}
    const std::uint64_t threshold = static_cast<std::uint64_t>(p_add * 9007199254740992.0);
    auto take = [&](std::vector<std::pair<VertexId, VertexId>>& pool) {
        std::size_t i = static_cast<std::size_t>(rng.below(pool.size()));
        auto e = pool[i];
        pool[i] = pool.back();
        pool.pop_back();
        return e;
    };

    EditScript script;
    script.initial_n = n;
    script.ops.reserve(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        bool want_add = (rng.raw() >> 11) < threshold;
        bool do_add = want_add ? !absent.empty() : present.empty();
        if (do_add) {
            auto e = take(absent);
            script.ops.push_back(EditOp::add_edge_op(e.first, e.second));
            present.push_back(e);
        } else {
            auto e = take(present);
            script.ops.push_back(EditOp::del_edge_op(e.first, e.second));
            absent.push_back(e);
        }
    }
    return script;
}

} // namespace dynmaint
