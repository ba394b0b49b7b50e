#pragma once

#include <boost/rational.hpp>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "edit.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "solution.hpp"
#include "tracked_view.hpp"

namespace dynmaint {

using Ratio = boost::rational<long long>;

inline Ratio make_ratio(std::size_t num, std::size_t den) {
    if (den == 0) throw Degenerate("ratio with zero denominator");
    return Ratio(static_cast<long long>(num), static_cast<long long>(den));
}

inline std::string to_string(const Ratio& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

struct MaintainerSpec {
    enum class WorkBound { constant, degree_linear, fpt, unbounded };

    std::size_t claimed_radius = 0;
    WorkBound claimed_work_bound = WorkBound::unbounded;
    std::size_t work_constant = 0; // the c of work <= c*(deg(u)+deg(v)+1), degree-linear only
};

inline std::string to_string(MaintainerSpec::WorkBound b) {
    switch (b) {
        case MaintainerSpec::WorkBound::constant: return "constant";
        case MaintainerSpec::WorkBound::degree_linear: return "degree-linear";
        case MaintainerSpec::WorkBound::fpt: return "fpt";
        case MaintainerSpec::WorkBound::unbounded: return "unbounded";
    }
    return "?";
}

struct StepReport {
    std::size_t step_index = 0; // 1-based
    EditOp op{EditOp::Kind::add_vertex, 0, 0};
    std::set<VertexId> touched_read;
    std::set<VertexId> touched_write;
    std::size_t work_units = 0;
    std::size_t locality_radius = 0;
    std::size_t solution_size = 0;
    std::optional<std::size_t> optimum_size;
    std::size_t endpoint_degree_sum = 0; // deg of op endpoints in G_{i+1} (absent = 0)
};

struct RunReport {
    std::vector<StepReport> steps;
    std::optional<Ratio> max_ratio; // max gamma_i/gamma*_i over oracle steps; absent if none eligible
    std::size_t max_locality = 0;
    std::size_t max_work = 0;
    SolutionSnapshot final_solution;
    std::size_t initial_size = 0;              // gamma_1, before any edit
    std::optional<std::size_t> initial_opt;    // gamma*_1, when oracle present
    std::vector<SolutionSnapshot> solutions;   // filled when RunOptions.record_solutions:
                                               // index 0 = initial, then one per step
};

struct RunOptions {
    bool validate = true;          // check the solution after every step
    bool record_solutions = false; // keep per-step member sets (union_permanent input)
};

using Oracle = std::function<std::size_t(const DynamicGraph&)>;

// Distance of the farthest touched vertex from the edit site, measured in
// the post-edit graph. A touched vertex unreachable from every endpoint gets
// the sentinel |V|, which exceeds any true hop distance.
inline std::size_t locality_radius_of(const DynamicGraph& g_after, const EditOp& op,
                                      const std::set<VertexId>& touched_read,
                                      const std::set<VertexId>& touched_write) {
    auto dist = bfs_distances(g_after, op.endpoints());
    std::size_t radius = 0;
    auto account = [&](const std::set<VertexId>& vs) {
        for (VertexId v : vs) {
            auto it = dist.find(v);
            std::size_t d = (it == dist.end()) ? g_after.num_vertices() : it->second;
            if (d > radius) radius = d;
        }
    };
    account(touched_read);
    account(touched_write);
    return radius;
}

// Shared by maintainers: assemble the per-step evidence. Graph reads come
// from the view; state reads are touched-but-free; each state write costs 1.
inline StepReport make_step_report(const TrackedGraphView& view,
                                   const std::set<VertexId>& state_reads,
                                   const std::set<VertexId>& state_writes,
                                   std::size_t write_events, const EditOp& op,
                                   std::size_t solution_size) {
    StepReport rep;
    rep.op = op;
    rep.touched_read = view.read_log();
    rep.touched_read.insert(state_reads.begin(), state_reads.end());
    rep.touched_write = state_writes;
    rep.work_units = view.work() + write_events;
    rep.solution_size = solution_size;
    rep.locality_radius = locality_radius_of(view.underlying(), op, rep.touched_read, rep.touched_write);
    return rep;
}

enum class StepClass { divergent, other };

inline std::string to_string(StepClass c) {
    return c == StepClass::divergent ? "divergent" : "other";
}

// A step is divergent when the optimum shrinks but the maintained solution
// does not, or the optimum stalls while the maintained solution grows.
inline StepClass classify_step(std::size_t prev_size, std::size_t new_size,
                               std::size_t prev_opt, std::size_t new_opt) {
    if (new_opt < prev_opt && new_size >= prev_size) return StepClass::divergent;
    if (new_opt == prev_opt && new_size > prev_size) return StepClass::divergent;
    return StepClass::other;
}

namespace detail {

inline void fold_ratio(std::optional<Ratio>& acc, std::size_t gamma, std::size_t opt,
                       std::size_t step_index) {
    if (opt == 0) {
        if (gamma == 0) return; // empty-instance step: no ratio to take
        throw Degenerate("step " + std::to_string(step_index) +
                         ": nonzero solution size with zero optimum");
    }
    Ratio r = make_ratio(gamma, opt);
    if (!acc || r > *acc) acc = r;
}

} // namespace detail

// Replays a script against a maintainer, instrumenting every step. The
// maintainer sees only a TrackedGraphView of the post-edit graph; the oracle
// (when present) runs on the raw graph and is charged nothing.
template <typename Maintainer>
RunReport run(const DynamicGraph& g0, const EditScript& script, const Maintainer& maintainer,
              const Oracle& oracle = {}, const RunOptions& options = {},
              typename Maintainer::State* final_state = nullptr) {
    if (static_cast<VertexId>(g0.num_vertices()) != script.initial_n)
        throw PreconditionViolation("run: graph has " + std::to_string(g0.num_vertices()) +
                                    " vertices, script expects " + std::to_string(script.initial_n));

    DynamicGraph g = g0;
    typename Maintainer::State state = maintainer.init(g);

    RunReport report;
    SolutionSnapshot snap = maintainer.snapshot(state);
    if (options.validate && !is_valid_solution(g, snap))
        throw InvalidSolution(0, "initial solution invalid");
    report.initial_size = snap.size();
    if (oracle) report.initial_opt = oracle(g);
    if (options.record_solutions) report.solutions.push_back(snap);

    report.steps.reserve(script.ops.size());
    for (std::size_t i = 0; i < script.ops.size(); ++i) {
        const EditOp& op = script.ops[i];
        const std::size_t step = i + 1;
        try {
            apply_edit(g, op);
        } catch (const PreconditionViolation& e) {
            throw PreconditionViolation("step " + std::to_string(step) + ": " + e.what());
        }

        TrackedGraphView view(g);
        StepReport rep = maintainer.on_edit(state, view, op);
        rep.step_index = step;
        for (VertexId v : op.endpoints())
            if (g.has_vertex(v)) rep.endpoint_degree_sum += g.degree(v);

        snap = maintainer.snapshot(state);
        if (options.validate) {
            if (!is_valid_solution(g, snap))
                throw InvalidSolution(static_cast<long long>(step),
                                      to_string(snap.problem) + " invalid after " + to_string(op));
            if (snap.size() != rep.solution_size)
                throw CorruptState("step " + std::to_string(step) +
                                   ": reported size disagrees with state");
        }
        if (oracle) {
            rep.optimum_size = oracle(g);
            detail::fold_ratio(report.max_ratio, rep.solution_size, *rep.optimum_size, step);
        }
        if (rep.locality_radius > report.max_locality) report.max_locality = rep.locality_radius;
        if (rep.work_units > report.max_work) report.max_work = rep.work_units;
        if (options.record_solutions) report.solutions.push_back(snap);
        report.steps.push_back(std::move(rep));
    }

    report.final_solution = maintainer.snapshot(state);
    if (final_state) *final_state = std::move(state);
    return report;
}

// Max gamma/gamma* over the run, demanding an oracle value at every step.
// Steps on empty instances (gamma = gamma* = 0) carry no ratio; a run made
// up solely of those yields the neutral 1.
inline Ratio max_ratio(const RunReport& report) {
    std::optional<Ratio> acc;
    for (const StepReport& rep : report.steps) {
        if (!rep.optimum_size)
            throw MissingOracle("step " + std::to_string(rep.step_index) + " has no optimum size");
        detail::fold_ratio(acc, rep.solution_size, *rep.optimum_size, rep.step_index);
    }
    return acc.value_or(Ratio(1));
}

struct UnionPermanent {
    std::set<VertexId> members;
    bool valid = false;
};

// Union of per-instant covers, checked against every instant's graph. Only
// Vertex Cover gets this combinator (a union of covers covers every edge
// that ever existed; no analogous guarantee is claimed for domination).
inline UnionPermanent union_permanent(const std::vector<SolutionSnapshot>& solutions,
                                      const std::vector<DynamicGraph>& graphs) {
    if (solutions.size() != graphs.size())
        throw PreconditionViolation("union_permanent: " + std::to_string(solutions.size()) +
                                    " solutions vs " + std::to_string(graphs.size()) + " graphs");
    UnionPermanent out;
    for (const SolutionSnapshot& s : solutions) {
        if (s.problem != Problem::vertex_cover)
            throw UnsupportedProblem("union_permanent handles vertex-cover only, got " +
                                     to_string(s.problem));
        out.members.insert(s.members.begin(), s.members.end());
    }
    out.valid = true;
    for (const DynamicGraph& g : graphs)
        if (!is_vertex_cover(g, out.members)) {
            out.valid = false;
            break;
        }
    return out;
}

} // namespace dynmaint
