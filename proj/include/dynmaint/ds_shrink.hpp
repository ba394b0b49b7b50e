#pragma once

#include <set>

#include "maintenance.hpp"

namespace dynmaint {

struct DsState {
    std::set<VertexId> members;
};

// Shrink-greedy Dominating Set maintainer. Starts from the all-vertices
// solution and, when an edge arrives, drops an endpoint that has become
// redundant; vertices re-add themselves only when an edit leaves them
// undominated. Checks reach two hops from the edit (the dropped endpoint's
// neighbors and their neighborhoods), hence radius 2 and no work bound —
// deliberately a plausible-but-myopic heuristic.
class DsShrinkMaintainer {
public:
    using State = DsState;

    MaintainerSpec spec() const {
        return MaintainerSpec{2, MaintainerSpec::WorkBound::unbounded, 0};
    }

    State init(const DynamicGraph& g) const {
        State st;
        for (VertexId v : g.vertices()) st.members.insert(v);
        return st;
    }

    SolutionSnapshot snapshot(const State& st) const {
        SolutionSnapshot s;
        s.problem = Problem::dominating_set;
        s.members = st.members;
        return s;
    }

    StepReport on_edit(State& st, TrackedGraphView& g, const EditOp& op) const {
        std::set<VertexId> reads, writes;
        std::size_t write_events = 0;

        auto is_member = [&](VertexId v) {
            reads.insert(v);
            return st.members.count(v) != 0;
        };
        // does w keep a dominator besides x?
        auto dominated_without = [&](VertexId w, VertexId x) {
            if (w != x && is_member(w)) return true;
            for (VertexId y : g.neighbors(w))
                if (y != x && is_member(y)) return true;
            return false;
        };

        switch (op.kind) {
            case EditOp::Kind::add_edge: {
                for (VertexId x : {op.u, op.v}) {
                    if (!is_member(x)) continue;
                    bool removable = dominated_without(x, x); // x itself needs another dominator
                    if (removable) {
                        for (VertexId w : g.neighbors(x)) {
                            if (!dominated_without(w, x)) {
                                removable = false;
                                break;
                            }
                        }
                    }
                    if (removable) {
                        st.members.erase(x);
                        writes.insert(x);
                        write_events += 1;
                    }
                }
                break;
            }
            case EditOp::Kind::del_edge: {
                // only the endpoints can lose their last dominator
                for (VertexId x : {op.u, op.v}) {
                    if (is_member(x)) continue;
                    bool dominated = false;
                    for (VertexId w : g.neighbors(x))
                        if (is_member(w)) {
                            dominated = true;
                            break;
                        }
                    if (!dominated) {
                        st.members.insert(x);
                        writes.insert(x);
                        write_events += 1;
                    }
                }
                break;
            }
            case EditOp::Kind::add_vertex:
                st.members.insert(op.u);
                writes.insert(op.u);
                write_events += 1;
                break;
            case EditOp::Kind::del_vertex:
                if (!is_member(op.u))
                    throw CorruptState("isolated vertex " + std::to_string(op.u) +
                                       " was not a member");
                st.members.erase(op.u);
                writes.insert(op.u);
                write_events += 1;
                break;
        }

        return make_step_report(g, reads, writes, write_events, op, st.members.size());
    }
};

} // namespace dynmaint
