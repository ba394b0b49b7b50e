#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "divergence.hpp"
#include "io.hpp"
#include "maintenance.hpp"
#include "reduction.hpp"

namespace dynmaint {

using json = nlohmann::ordered_json;

namespace detail {

inline json ratio_or_null(const std::optional<Ratio>& r) {
    if (!r) return nullptr;
    return to_string(*r);
}

inline json touched_union(const StepReport& s) {
    std::set<VertexId> merged = s.touched_read;
    merged.insert(s.touched_write.begin(), s.touched_write.end());
    return json(std::vector<VertexId>(merged.begin(), merged.end()));
}

} // namespace detail

inline json step_to_json(const StepReport& s) {
    json j;
    j["step"] = s.step_index;
    j["op"] = to_string(s.op);
    j["gamma"] = s.solution_size;
    j["gamma_opt"] = s.optimum_size ? json(*s.optimum_size) : json(nullptr);
    j["work"] = s.work_units;
    j["radius"] = s.locality_radius;
    j["touched"] = detail::touched_union(s);
    return j;
}

// one JSON object per line: every step, then a summary object
inline void write_run_jsonl(std::ostream& out, const RunReport& run) {
    for (const StepReport& s : run.steps) out << step_to_json(s).dump() << "\n";
    json summary;
    summary["max_ratio"] = detail::ratio_or_null(run.max_ratio);
    summary["max_work"] = run.max_work;
    summary["max_radius"] = run.max_locality;
    out << summary.dump() << "\n";
}

inline void write_run_jsonl(const std::string& path, const RunReport& run) {
    auto out = detail::open_out(path);
    write_run_jsonl(out, run);
}

// gamma_opt and ratio columns stay empty on steps without an oracle value
inline void write_run_csv(std::ostream& out, const RunReport& run) {
    out << "step,gamma,gamma_opt,ratio,work,radius\n";
    for (const StepReport& s : run.steps) {
        out << s.step_index << "," << s.solution_size << ",";
        if (s.optimum_size) {
            out << *s.optimum_size << ",";
            if (*s.optimum_size == 0)
                out << (s.solution_size == 0 ? "0" : "");
            else
                out << to_string(make_ratio(s.solution_size, *s.optimum_size));
        } else {
            out << ",";
        }
        out << "," << s.work_units << "," << s.locality_radius << "\n";
    }
}

inline void write_run_csv(const std::string& path, const RunReport& run) {
    auto out = detail::open_out(path);
    write_run_csv(out, run);
}

inline json divergence_to_json(const DivergenceReport& rep) {
    json j;
    j["initial_size"] = rep.run.initial_size;
    j["initial_opt"] = rep.initial_opt;
    j["final_size"] = rep.final_size;
    j["final_opt"] = rep.final_opt;
    j["divergent_steps"] = rep.divergent_steps;
    j["final_ratio"] =
        rep.final_opt == 0 ? json(nullptr) : json(to_string(make_ratio(rep.final_size, rep.final_opt)));
    j["bound_rhs"] = to_string(rep.bound_rhs);
    j["bound_holds"] = rep.bound_holds;
    json trace = json::array();
    for (const StepReport& s : rep.run.steps) {
        json row;
        row["step"] = s.step_index;
        row["op"] = to_string(s.op);
        row["gamma"] = s.solution_size;
        row["gamma_opt"] = s.optimum_size ? json(*s.optimum_size) : json(nullptr);
        trace.push_back(row);
    }
    j["trace"] = trace;
    return j;
}

inline void write_divergence(const std::string& path, const DivergenceReport& rep) {
    auto out = detail::open_out(path);
    out << divergence_to_json(rep).dump(2) << "\n";
}

inline json equivalence_to_json(const EquivalenceReport& rep) {
    json j;
    j["clique_found"] = rep.clique_found;
    j["deletion_found"] = rep.deletion_found;
    j["consistent"] = rep.consistent;
    j["witness_maps_back"] = rep.witness_maps_back;
    j["clique"] = rep.clique ? json(*rep.clique) : json(nullptr);
    j["witness"] =
        rep.witness ? json(std::vector<VertexId>(rep.witness->begin(), rep.witness->end()))
                    : json(nullptr);
    j["decoded"] = rep.decoded ? json(*rep.decoded) : json(nullptr);
    return j;
}

inline void write_equivalence(const std::string& path, const EquivalenceReport& rep) {
    auto out = detail::open_out(path);
    out << equivalence_to_json(rep).dump(2) << "\n";
}

} // namespace dynmaint
