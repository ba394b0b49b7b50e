// dynmaint: drive maintainers over edit scripts, run the star divergence
// experiment, and build/check the regular-deletion reduction from the
// command line. Machine output goes to files, human summaries to stdout,
// failures to stderr as a single "error:" line.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dynmaint/divergence.hpp>
#include <dynmaint/ds_shrink.hpp>
#include <dynmaint/exact.hpp>
#include <dynmaint/io.hpp>
#include <dynmaint/matching_cover.hpp>
#include <dynmaint/report_io.hpp>

namespace {

using namespace dynmaint;

constexpr int exit_ok = 0;
constexpr int exit_invalid = 2; // solution failed validation / check came out negative
constexpr int exit_budget = 3;  // bad parameters, bad input, exhausted search budget

struct MaintainConfig {
    std::string maintainer = "vc-matching";
    std::string oracle = "none";
    std::string gen;
    long long n = 0;
    std::size_t steps = 0;
    double p_add = 0.5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string graph_path, script_path;
    std::string jsonl_path, csv_path, state_dump_path;
};

Oracle pick_oracle(const std::string& name, Problem problem) {
    if (name == "none") return {};
    if (name == "analytic-star") return [](const DynamicGraph& g) { return analytic_star_optimum(g); };
    if (name == "exact") {
        if (problem == Problem::vertex_cover)
            return [](const DynamicGraph& g) { return vc_exact(g).size(); };
        return [](const DynamicGraph& g) { return ds_exact(g).size(); };
    }
    throw PreconditionViolation("unknown oracle '" + name + "'");
}

void print_run_summary(const RunReport& run) {
    std::cout << "steps " << run.steps.size() << "\n";
    std::cout << "final solution size " << run.final_solution.size() << "\n";
    std::cout << "max_work " << run.max_work << "\n";
    std::cout << "max_radius " << run.max_locality << "\n";
    std::cout << "max_ratio " << (run.max_ratio ? to_string(*run.max_ratio) : std::string("n/a"))
              << "\n";
}

int cmd_maintain(const MaintainConfig& cfg) {
    EditScript script;
    DynamicGraph g0 = DynamicGraph::edgeless(0);
    if (!cfg.gen.empty()) {
        if (cfg.gen != "churn")
            throw PreconditionViolation("unknown generator '" + cfg.gen + "' (try churn)");
        if (!cfg.seed_set) throw PreconditionViolation("--gen churn needs --seed");
        script = churn_script(cfg.n, cfg.steps, cfg.p_add, cfg.seed);
        g0 = DynamicGraph::edgeless(script.initial_n);
    } else if (!cfg.script_path.empty()) {
        script = read_script(cfg.script_path);
        g0 = cfg.graph_path.empty() ? DynamicGraph::edgeless(script.initial_n)
                                    : read_graph(cfg.graph_path);
    } else {
        throw PreconditionViolation("need either --gen churn or --script");
    }

    RunReport run;
    MatchingCoverState matching_final;
    if (cfg.maintainer == "vc-matching") {
        MatchingCoverMaintainer m;
        run = dynmaint::run(g0, script, m, pick_oracle(cfg.oracle, Problem::vertex_cover), {},
                            &matching_final);
        if (!cfg.state_dump_path.empty()) write_matching_state(cfg.state_dump_path, matching_final);
    } else if (cfg.maintainer == "ds-shrink") {
        DsShrinkMaintainer m;
        run = dynmaint::run(g0, script, m, pick_oracle(cfg.oracle, Problem::dominating_set));
        if (!cfg.state_dump_path.empty())
            throw PreconditionViolation("--state-dump applies to vc-matching only");
    } else {
        throw PreconditionViolation("unknown maintainer '" + cfg.maintainer + "'");
    }

    if (!cfg.jsonl_path.empty()) write_run_jsonl(cfg.jsonl_path, run);
    if (!cfg.csv_path.empty()) write_run_csv(cfg.csv_path, run);
    print_run_summary(run);
    return exit_ok;
}

struct DivergenceConfig {
    long long n = 0;
    std::string out_path;
};

int cmd_divergence(const DivergenceConfig& cfg) {
    StarPlan plan = star_script(cfg.n);
    DsShrinkMaintainer m;
    RunReport run = dynmaint::run(plan.g0, plan.script, m,
                                  [](const DynamicGraph& g) { return analytic_star_optimum(g); });
    DivergenceReport rep = analyze_divergence(run);

    std::cout << "step  gamma  gamma*  class\n";
    std::size_t prev_size = run.initial_size;
    std::size_t prev_opt = *run.initial_opt;
    std::cout << "init  " << prev_size << "  " << prev_opt << "  -\n";
    for (const StepReport& s : run.steps) {
        StepClass cls = classify_step(prev_size, s.solution_size, prev_opt, *s.optimum_size);
        std::cout << s.step_index << "  " << s.solution_size << "  " << *s.optimum_size << "  "
                  << to_string(cls) << "\n";
        prev_size = s.solution_size;
        prev_opt = *s.optimum_size;
    }
    std::cout << "divergent_steps " << rep.divergent_steps << "\n";
    std::cout << "final ratio " << to_string(make_ratio(rep.final_size, rep.final_opt)) << "\n";
    std::cout << "bound_rhs " << to_string(rep.bound_rhs) << "\n";
    std::cout << "bound_holds " << (rep.bound_holds ? "true" : "false") << "\n";
    if (!cfg.out_path.empty()) write_divergence(cfg.out_path, rep);
    return exit_ok;
}

struct ReduceConfig {
    long long k = 0, s = 0, d = 0;
    std::uint64_t seed = 0;
    bool planted = false;
    bool verify = false;
    std::vector<long long> g_coeffs;
    std::string out_prefix = "reduction";
};

int cmd_reduce(const ReduceConfig& cfg) {
    ApproxBudget budget;
    if (!cfg.g_coeffs.empty()) {
        if (cfg.g_coeffs.size() != 2)
            throw PreconditionViolation("--g wants two comma-separated integers a,b");
        budget.a = cfg.g_coeffs[0];
        budget.b = cfg.g_coeffs[1];
    }
    SrmcInstance inst = gen_srmc(cfg.k, cfg.s, cfg.d, cfg.seed, cfg.planted);
    ReductionInstance red = reduce(inst, budget);

    write_graph(cfg.out_prefix + ".graph", red.graph);
    write_provenance(cfg.out_prefix + ".prov", red);

    std::cout << "source k=" << cfg.k << " s=" << cfg.s << " d=" << cfg.d << " seed=" << cfg.seed
              << (cfg.planted ? " planted" : "") << "\n";
    std::cout << "reduced n=" << red.graph.num_vertices() << " m=" << red.graph.num_edges()
              << " k'=" << red.k_prime << " r=" << red.regular_degree << "\n";
    std::cout << "degree_audit " << (degree_audit(red) ? "pass" : "fail") << "\n";

    if (!cfg.verify) return exit_ok;
    EquivalenceReport rep = equivalence_check(inst, budget);
    write_equivalence(cfg.out_prefix + ".equiv.json", rep);
    std::cout << "clique " << (rep.clique_found ? "found" : "none") << ", deletion "
              << (rep.deletion_found ? "found" : "none") << "\n";
    std::cout << "consistent " << (rep.consistent ? "true" : "false") << "\n";
    if (rep.deletion_found)
        std::cout << "witness_maps_back " << (rep.witness_maps_back ? "true" : "false") << "\n";
    bool healthy = rep.consistent && (!rep.deletion_found || rep.witness_maps_back);
    return healthy ? exit_ok : exit_invalid;
}

struct GenConfig {
    std::string kind;
    long long n = 0;
    std::size_t steps = 0;
    double p_add = 0.5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out_path;
};

int cmd_gen(const GenConfig& cfg) {
    EditScript script;
    if (cfg.kind == "churn") {
        if (!cfg.seed_set) throw PreconditionViolation("gen churn needs --seed");
        script = churn_script(cfg.n, cfg.steps, cfg.p_add, cfg.seed);
    } else if (cfg.kind == "star") {
        StarPlan plan = star_script(cfg.n);
        script = plan.script;
        std::cout << "center " << plan.center << "\n";
    } else {
        throw PreconditionViolation("unknown generator '" + cfg.kind + "' (churn|star)");
    }
    write_script(cfg.out_path, script);
    std::cout << "wrote " << script.ops.size() << " ops on " << script.initial_n << " vertices to "
              << cfg.out_path << "\n";
    return exit_ok;
}

struct VerifyConfig {
    std::string graph_path;
    std::size_t r = 0;
    std::optional<std::size_t> max_deletions;
    std::size_t node_cap = default_node_cap;
    std::vector<VertexId> witness;
};

int cmd_verify(const VerifyConfig& cfg) {
    DynamicGraph g = read_graph(cfg.graph_path);
    if (!cfg.witness.empty()) {
        DynamicGraph h = g;
        for (VertexId v : cfg.witness) {
            if (!h.has_vertex(v))
                throw PreconditionViolation("witness vertex " + std::to_string(v) +
                                            " absent (or listed twice)");
            std::vector<VertexId> nb(h.neighbors(v).begin(), h.neighbors(v).end());
            for (VertexId w : nb) h.del_edge(std::min(v, w), std::max(v, w));
            h.del_vertex(v);
        }
        bool ok = h.num_vertices() > 0 && h.is_regular(cfg.r);
        std::cout << "witness " << (ok ? "valid" : "invalid") << ": " << h.num_vertices()
                  << " vertices remain\n";
        return ok ? exit_ok : exit_invalid;
    }
    std::size_t cap = cfg.max_deletions.value_or(g.num_vertices() ? g.num_vertices() - 1 : 0);
    auto found = find_regular_deletion(g, cfg.r, cap, cfg.node_cap);
    if (!found) {
        std::cout << "no deletion set of size <= " << cap << " leaves a " << cfg.r
                  << "-regular graph\n";
        return exit_ok;
    }
    std::cout << "canonical witness (" << found->size() << "):";
    for (VertexId v : *found) std::cout << " " << v;
    std::cout << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic-graph solution maintenance toolkit"};
    app.require_subcommand(1);

    MaintainConfig mc;
    CLI::App* maintain = app.add_subcommand("maintain", "replay a script against a maintainer");
    maintain->add_option("--maintainer", mc.maintainer, "vc-matching | ds-shrink");
    maintain->add_option("--oracle", mc.oracle, "exact | analytic-star | none");
    maintain->add_option("--gen", mc.gen, "generate the script instead of reading one (churn)");
    maintain->add_option("--n", mc.n, "vertex count for --gen");
    maintain->add_option("--steps", mc.steps, "op count for --gen");
    maintain->add_option("--p-add", mc.p_add, "edge-add probability for churn");
    maintain->add_option("--seed", mc.seed, "generator seed")->each([&mc](const std::string&) {
        mc.seed_set = true;
    });
    maintain->add_option("--graph", mc.graph_path, "initial graph file");
    maintain->add_option("--script", mc.script_path, "edit script file");
    maintain->add_option("--jsonl", mc.jsonl_path, "write per-step report as JSON lines");
    maintain->add_option("--csv", mc.csv_path, "write per-step report as CSV");
    maintain->add_option("--state-dump", mc.state_dump_path, "write final matching state");

    DivergenceConfig dc;
    CLI::App* divergence = app.add_subcommand("divergence", "star experiment for ds-shrink");
    divergence->add_option("--n", dc.n, "star size (>= 3)")->required();
    divergence->add_option("--out", dc.out_path, "write the report as JSON");

    ReduceConfig rc;
    CLI::App* reduce = app.add_subcommand("reduce", "build the regular-deletion instance");
    reduce->add_option("--k", rc.k, "class count")->required();
    reduce->add_option("--s", rc.s, "class size (even)")->required();
    reduce->add_option("--d", rc.d, "inter-class regularity")->required();
    reduce->add_option("--seed", rc.seed, "generator seed")->required();
    reduce->add_flag("--planted", rc.planted, "plant a multicolored clique");
    reduce->add_flag("--verify", rc.verify, "run both oracles and compare");
    reduce->add_option("--g", rc.g_coeffs, "deletion budget g(x) = a*x + b as a,b")->delimiter(',');
    reduce->add_option("--out", rc.out_prefix, "output path prefix");

    GenConfig gc;
    CLI::App* gen = app.add_subcommand("gen", "write an edit script");
    gen->add_option("kind", gc.kind, "churn | star")->required();
    gen->add_option("--n", gc.n, "vertex count")->required();
    gen->add_option("--steps", gc.steps, "op count (churn)");
    gen->add_option("--p-add", gc.p_add, "edge-add probability (churn)");
    gen->add_option("--seed", gc.seed, "generator seed")->each([&gc](const std::string&) {
        gc.seed_set = true;
    });
    gen->add_option("--out", gc.out_path, "script file to write")->required();

    VerifyConfig vc;
    CLI::App* verify = app.add_subcommand("verify", "regular-deletion check on a graph file");
    verify->add_option("--graph", vc.graph_path, "graph file")->required();
    verify->add_option("--r", vc.r, "target regular degree")->required();
    verify->add_option("--max-deletions", vc.max_deletions, "deletion budget for the search");
    verify->add_option("--node-cap", vc.node_cap, "search node budget");
    verify->add_option("--witness", vc.witness, "comma-separated vertices to delete and check")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    }

    try {
        if (maintain->parsed()) return cmd_maintain(mc);
        if (divergence->parsed()) return cmd_divergence(dc);
        if (reduce->parsed()) return cmd_reduce(rc);
        if (gen->parsed()) return cmd_gen(gc);
        if (verify->parsed()) return cmd_verify(vc);
        std::cerr << "error: no subcommand\n";
        return exit_budget;
    } catch (const InvalidSolution& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_budget;
    }
}
