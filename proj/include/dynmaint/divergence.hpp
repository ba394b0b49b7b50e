#pragma once

#include <string>

#include "edit.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "maintenance.hpp"

namespace dynmaint {

struct DivergenceReport {
    RunReport run;
    std::size_t divergent_steps = 0; // the d of the long-divergence bound
    std::size_t initial_opt = 0;     // optimum before any edit
    std::size_t final_size = 0;
    std::size_t final_opt = 0;
    Ratio bound_rhs = Ratio(1); // 1 + d/final_opt
    bool bound_holds = false;   // final_size/final_opt >= bound_rhs
};

struct StarPlan {
    DynamicGraph g0; // edgeless on n
    EditScript script;
    VertexId center = 0;
};

// Grow a star one edge at a time. The center gets the smallest id so that
// ascending-order shrink rules process it first and drop it from the
// dominating set at the very first edge.
inline StarPlan star_script(VertexId n) {
    if (n < 3) throw Degenerate("star needs n >= 3, got " + std::to_string(n));
    StarPlan plan;
    plan.g0 = DynamicGraph::edgeless(n);
    plan.center = 0;
    plan.script.initial_n = n;
    plan.script.ops.reserve(static_cast<std::size_t>(n - 1));
    for (VertexId leaf = 1; leaf < n; ++leaf)
        plan.script.ops.push_back(EditOp::add_edge_op(plan.center, leaf));
    return plan;
}

// Count divergent steps and test the long-divergence inequality
// final_size/final_opt >= 1 + d/final_opt on a completed run.
inline DivergenceReport analyze_divergence(const RunReport& run) {
    if (!run.initial_opt)
        throw MissingOracle("run lacks an optimum for the initial graph");

    DivergenceReport rep;
    rep.initial_opt = *run.initial_opt;

    std::size_t prev_size = run.initial_size;
    std::size_t prev_opt = *run.initial_opt;
    for (const StepReport& step : run.steps) {
        if (!step.optimum_size)
            throw MissingOracle("step " + std::to_string(step.step_index) + " has no optimum size");
        if (classify_step(prev_size, step.solution_size, prev_opt, *step.optimum_size) ==
            StepClass::divergent)
            ++rep.divergent_steps;
        prev_size = step.solution_size;
        prev_opt = *step.optimum_size;
    }

    rep.final_size = prev_size;
    rep.final_opt = prev_opt;
    if (rep.final_opt == 0)
        throw Degenerate("final optimum is zero; divergence ratio undefined");
    rep.bound_rhs = Ratio(1) + make_ratio(rep.divergent_steps, rep.final_opt);
    rep.bound_holds = make_ratio(rep.final_size, rep.final_opt) >= rep.bound_rhs;
    rep.run = run;
    return rep;
}

// Ratio forced one step after a divergent move from a tight A-approximate
// state: gamma goes A*opt -> A*opt + 1 while the optimum stays put.
inline Ratio single_step_ratio(const Ratio& a, std::size_t opt) {
    if (opt < 1) throw PreconditionViolation("single_step_ratio: opt must be >= 1");
    if (a < Ratio(1)) throw PreconditionViolation("single_step_ratio: A must be >= 1");
    return a + Ratio(1, static_cast<long long>(opt));
}

} // namespace dynmaint
