#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "edit.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "matching_cover.hpp"
#include "reduction.hpp"

namespace dynmaint {

namespace detail {

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    return out;
}

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path + " for reading");
    return in;
}

} // namespace detail

// graph file: "n m" then one "u v" line per edge, u < v, ascending
inline void write_graph(std::ostream& out, const DynamicGraph& g) {
    for (VertexId v : g.vertices())
        if (v < 0 || v >= static_cast<VertexId>(g.num_vertices()))
            throw PreconditionViolation("graph file needs ids 0..n-1, found " + std::to_string(v));
    out << g.num_vertices() << " " << g.num_edges() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

inline void write_graph(const std::string& path, const DynamicGraph& g) {
    auto out = detail::open_out(path);
    write_graph(out, g);
}

inline DynamicGraph read_graph(std::istream& in) {
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("graph file: bad header");
    DynamicGraph g = DynamicGraph::edgeless(n);
    for (long long i = 0; i < m; ++i) {
        VertexId u, v;
        if (!(in >> u >> v)) throw ParseError("graph file: truncated edge list");
        if (u >= v) throw ParseError("graph file: edge lines need u < v");
        g.add_edge(u, v);
    }
    return g;
}

inline DynamicGraph read_graph(const std::string& path) {
    auto in = detail::open_in(path);
    return read_graph(in);
}

// script file: "n" then one op per line: AE u v | DE u v | AV v | DV v
inline void write_script(std::ostream& out, const EditScript& script) {
    out << script.initial_n << "\n";
    for (const EditOp& op : script.ops) out << to_string(op) << "\n";
}

inline void write_script(const std::string& path, const EditScript& script) {
    auto out = detail::open_out(path);
    write_script(out, script);
}

inline EditScript read_script(std::istream& in) {
    EditScript script;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("script file: missing header");
    try {
        script.initial_n = std::stoll(line);
    } catch (...) {
        throw ParseError("script file: bad vertex count '" + line + "'");
    }
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kind;
        VertexId u = -1, v = -1;
        ls >> kind;
        if (kind == "AE" || kind == "DE") {
            if (!(ls >> u >> v)) throw ParseError("script line " + std::to_string(lineno) +
                                                  ": edge op needs two endpoints");
            script.ops.push_back(kind == "AE" ? EditOp::add_edge_op(u, v)
                                              : EditOp::del_edge_op(u, v));
        } else if (kind == "AV" || kind == "DV") {
            if (!(ls >> u)) throw ParseError("script line " + std::to_string(lineno) +
                                             ": vertex op needs one vertex");
            script.ops.push_back(kind == "AV" ? EditOp::add_vertex_op(u)
                                              : EditOp::del_vertex_op(u));
        } else {
            throw ParseError("script line " + std::to_string(lineno) + ": unknown op '" + kind +
                             "'");
        }
    }
    return script;
}

inline EditScript read_script(const std::string& path) {
    auto in = detail::open_in(path);
    return read_script(in);
}

// matching state dump: one sorted "u v" line per matched pair
inline void write_matching_state(std::ostream& out, const MatchingCoverState& st) {
    for (auto [u, v] : st.pair)
        if (u < v) out << u << " " << v << "\n";
}

inline void write_matching_state(const std::string& path, const MatchingCoverState& st) {
    auto out = detail::open_out(path);
    write_matching_state(out, st);
}

// provenance sidecar: one "id role fields..." line per vertex, ascending id
inline void write_provenance(std::ostream& out, const ReductionInstance& red) {
    for (const auto& [v, p] : red.provenance) {
        out << v << " " << to_string(p.role);
        switch (p.role) {
            case Provenance::Role::class_copy: out << " " << p.i << " " << p.orig_u; break;
            case Provenance::Role::pair_vertex:
                out << " " << p.i << " " << p.j << " " << p.orig_u << " " << p.orig_v << " "
                    << p.side;
                break;
            case Provenance::Role::pad_class: out << " " << p.i; break;
            case Provenance::Role::pad_side: out << " " << p.i << " " << p.j << " " << p.side; break;
            case Provenance::Role::filler: out << " " << p.owner; break;
        }
        out << "\n";
    }
}

inline void write_provenance(const std::string& path, const ReductionInstance& red) {
    auto out = detail::open_out(path);
    write_provenance(out, red);
}

inline std::map<VertexId, Provenance> read_provenance(std::istream& in) {
    std::map<VertexId, Provenance> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        VertexId id;
        std::string role;
        if (!(ls >> id >> role))
            throw ParseError("provenance line " + std::to_string(lineno) + ": bad prefix");
        Provenance p;
        bool ok = true;
        if (role == "class-copy") {
            p.role = Provenance::Role::class_copy;
            ok = static_cast<bool>(ls >> p.i >> p.orig_u);
        } else if (role == "pair") {
            p.role = Provenance::Role::pair_vertex;
            ok = static_cast<bool>(ls >> p.i >> p.j >> p.orig_u >> p.orig_v >> p.side);
        } else if (role == "pad-class") {
            p.role = Provenance::Role::pad_class;
            ok = static_cast<bool>(ls >> p.i);
        } else if (role == "pad-side") {
            p.role = Provenance::Role::pad_side;
            ok = static_cast<bool>(ls >> p.i >> p.j >> p.side);
        } else if (role == "filler") {
            p.role = Provenance::Role::filler;
            ok = static_cast<bool>(ls >> p.owner);
        } else {
            throw ParseError("provenance line " + std::to_string(lineno) + ": unknown role '" +
                             role + "'");
        }
        if (!ok)
            throw ParseError("provenance line " + std::to_string(lineno) + ": missing fields");
        out[id] = p;
    }
    return out;
}

inline std::map<VertexId, Provenance> read_provenance(const std::string& path) {
    auto in = detail::open_in(path);
    return read_provenance(in);
}

} // namespace dynmaint
