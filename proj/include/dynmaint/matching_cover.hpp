#pragma once

#include <map>
#include <set>

#include "maintenance.hpp"

namespace dynmaint {

// Pair-vertex map: pair[u] = v and pair[v] = u exactly when {u,v} is a
// matching edge. The vertex cover is the key set.
struct MatchingCoverState {
    std::map<VertexId, VertexId> pair;

    bool covered(VertexId v) const { return pair.count(v) != 0; }
};

inline bool matching_symmetric(const MatchingCoverState& st) {
    for (auto [u, v] : st.pair) {
        auto it = st.pair.find(v);
        if (it == st.pair.end() || it->second != u) return false;
    }
    return true;
}

inline bool matching_realizable(const MatchingCoverState& st, const DynamicGraph& g) {
    for (auto [u, v] : st.pair)
        if (!g.has_edge(u, v)) return false;
    return true;
}

// no graph edge may have both endpoints unmatched
inline bool matching_maximal(const MatchingCoverState& st, const DynamicGraph& g) {
    for (auto [u, v] : g.edges())
        if (!st.covered(u) && !st.covered(v)) return false;
    return true;
}

// Maximal-matching maintainer: cover = matched vertices, a 2-approximate
// vertex cover kept valid under unit edits by touching only the edited
// endpoints and their direct neighbors (radius 1).
class MatchingCoverMaintainer {
public:
    using State = MatchingCoverState;

    MaintainerSpec spec() const {
        return MaintainerSpec{1, MaintainerSpec::WorkBound::degree_linear, 8};
    }

    // from-scratch greedy: scan edges ascending, match when both ends free
    State init(const DynamicGraph& g) const {
        State st;
        for (auto [u, v] : g.edges())
            if (!st.covered(u) && !st.covered(v)) {
                st.pair[u] = v;
                st.pair[v] = u;
            }
        return st;
    }

    SolutionSnapshot snapshot(const State& st) const { return cover(st); }

    SolutionSnapshot cover(const State& st) const {
        SolutionSnapshot s;
        s.problem = Problem::vertex_cover;
        for (auto [u, v] : st.pair) s.members.insert(u);
        return s;
    }

    StepReport on_edit(State& st, TrackedGraphView& g, const EditOp& op) const {
        std::set<VertexId> reads, writes;
        std::size_t write_events = 0;

        auto read_covered = [&](VertexId v) {
            reads.insert(v);
            return st.covered(v);
        };
        auto make_pair = [&](VertexId a, VertexId b) {
            st.pair[a] = b;
            st.pair[b] = a;
            writes.insert(a);
            writes.insert(b);
            write_events += 2;
        };

        switch (op.kind) {
            case EditOp::Kind::add_edge: {
                bool cu = read_covered(op.u);
                bool cv = read_covered(op.v);
                if (!cu && !cv) make_pair(op.u, op.v);
                break;
            }
            case EditOp::Kind::del_edge: {
                bool cu = read_covered(op.u);
                reads.insert(op.v);
                if (cu && st.pair.at(op.u) == op.v) {
                    auto it = st.pair.find(op.v);
                    if (it == st.pair.end() || it->second != op.u)
                        throw CorruptState("pair map asymmetric at deleted edge");
                    st.pair.erase(op.u);
                    st.pair.erase(op.v);
                    writes.insert(op.u);
                    writes.insert(op.v);
                    write_events += 2;
                    // separated endpoints re-pair in ascending order; the
                    // second one sees the first one's new partner
                    for (VertexId x : {op.u, op.v}) {
                        for (VertexId w : g.neighbors(x)) {
                            if (!read_covered(w)) {
                                make_pair(x, w);
                                break;
                            }
                        }
                    }
                }
                break;
            }
            case EditOp::Kind::add_vertex:
                break; // new vertex starts uncovered
            case EditOp::Kind::del_vertex:
                reads.insert(op.u);
                if (st.covered(op.u))
                    throw CorruptState("isolated vertex " + std::to_string(op.u) + " is matched");
                break;
        }

        return make_step_report(g, reads, writes, write_events, op, st.pair.size());
    }
};

} // namespace dynmaint
