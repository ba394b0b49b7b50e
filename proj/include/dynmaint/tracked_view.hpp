#pragma once

#include <set>

#include "graph.hpp"

namespace dynmaint {

// Read-only window a maintainer gets onto the post-edit graph. Logs which
// vertices had adjacency/membership queried (locality evidence) and charges
// work per query: point queries cost 1, a neighborhood scan costs 1 plus the
// number of entries it yields. Measurement code must go through underlying()
// instead, which logs and charges nothing.
class TrackedGraphView {
public:
    explicit TrackedGraphView(const DynamicGraph& g) : g_(g) {}

    bool has_vertex(VertexId v) {
        log_.insert(v);
        work_ += 1;
        return g_.has_vertex(v);
    }

    bool has_edge(VertexId u, VertexId v) {
        log_.insert(u);
        log_.insert(v);
        work_ += 1;
        return g_.has_edge(u, v);
    }

    std::size_t degree(VertexId v) {
        log_.insert(v);
        work_ += 1;
        return g_.degree(v);
    }

    const std::set<VertexId>& neighbors(VertexId v) {
        log_.insert(v);
        work_ += 1 + g_.degree(v);
        return g_.neighbors(v);
    }

    const std::set<VertexId>& read_log() const { return log_; }
    std::size_t work() const { return work_; }

    void reset() {
        log_.clear();
        work_ = 0;
    }

    const DynamicGraph& underlying() const { return g_; }

private:
    const DynamicGraph& g_;
    std::set<VertexId> log_;
    std::size_t work_ = 0;
};

} // namespace dynmaint
