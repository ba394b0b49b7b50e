#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "srmc.hpp"

namespace dynmaint {

// deletion allowance g(k) = a*k + b
struct ApproxBudget {
    long long a = 1;
    long long b = 0;

    long long g_of(long long k) const { return a * k + b; }
};

struct Provenance {
    enum class Role { class_copy, pair_vertex, pad_class, pad_side, filler };

    Role role;
    long long i = -1, j = -1;          // class indices (pair_vertex, pad_side: i < j)
    VertexId orig_u = -1, orig_v = -1; // class_copy: source vertex; pair_vertex: source cross edge
    long long side = -1;               // pair_vertex/pad_side: class whose side this vertex is on
    VertexId owner = -1;               // filler: the padded vertex its clique chain hangs off
};

inline std::string to_string(Provenance::Role r) {
    switch (r) {
        case Provenance::Role::class_copy: return "class-copy";
        case Provenance::Role::pair_vertex: return "pair";
        case Provenance::Role::pad_class: return "pad-class";
        case Provenance::Role::pad_side: return "pad-side";
        case Provenance::Role::filler: return "filler";
    }
    return "?";
}

struct ReductionInstance {
    DynamicGraph graph;
    long long k_prime = 0;      // deletions needed for a yes-instance: one per class, two per pair
    long long regular_degree = 0;
    ApproxBudget budget;
    std::map<VertexId, Provenance> provenance;
    long long src_k = 0, src_s = 0, src_d = 0;
};

// Smallest degree target exceeding both base degrees (class copies and pair
// vertices) with parity opposite to s, so every padding deficit is even.
inline long long compute_r(long long k, long long s, long long d) {
    detail::check_srmc_parameters(k, s, d);
    long long bound = std::max((s - 1) + d * (k - 1), 2 + (s - 1) * d);
    long long r = bound + 1;
    if (r % 2 == s % 2) ++r;
    return r;
}

// Gadget construction. Non-filler vertices end at degree r+1, fillers at r;
// deleting a multicolored clique's class copies plus both couple vertices of
// each clique edge restores r-regularity.
inline ReductionInstance reduce(const SrmcInstance& inst, const ApproxBudget& budget) {
    if (budget.a < 1 || budget.b < 0)
        throw InfeasibleParameters("budget needs a >= 1, b >= 0");

    const long long k = inst.k, s = inst.s, d = inst.d;
    const long long r = compute_r(k, s, d);

    ReductionInstance red;
    red.k_prime = k + k * (k - 1); // one copy per class + two couple vertices per class pair
    red.regular_degree = r;
    red.budget = budget;
    red.src_k = k;
    red.src_s = s;
    red.src_d = d;

    const long long pad_class_count = r + 1 - (s - 1) - d * (k - 1);
    const long long pool_count = r - 1 - (s - 1) * d;
    const long long deficit_class = r + 1 - s;
    const long long deficit_pool = r + 1 - s * d;
    if (pad_class_count < 1 || pool_count < 1)
        throw InfeasibleParameters("padding count came out non-positive");
    if (deficit_pool < 0)
        throw InfeasibleParameters("side-pool degree deficit is negative at these parameters");
    if (deficit_class % 2 != 0 || deficit_pool % 2 != 0)
        throw CorruptState("padding deficit is odd despite the parity rule");

    DynamicGraph& g = red.graph;
    VertexId next = 0;
    auto fresh = [&](const Provenance& p) {
        g.add_vertex(next);
        red.provenance[next] = p;
        return next++;
    };

    // class copies, same numbering as the source instance
    std::map<VertexId, VertexId> copy_of;
    for (long long i = 0; i < k; ++i)
        for (VertexId v = inst.class_begin(i); v < inst.class_end(i); ++v) {
            Provenance p;
            p.role = Provenance::Role::class_copy;
            p.i = i;
            p.orig_u = v;
            copy_of[v] = fresh(p);
        }
    for (long long i = 0; i < k; ++i)
        for (VertexId u = inst.class_begin(i); u < inst.class_end(i); ++u)
            for (VertexId v = u + 1; v < inst.class_end(i); ++v)
                g.add_edge(copy_of[u], copy_of[v]);

    // pair gadgets: one couple of vertices per source cross edge
    std::map<std::pair<long long, long long>, std::array<std::vector<VertexId>, 2>> side_vertices;
    std::map<VertexId, VertexId> base_of; // pair vertex -> its source base vertex
    for (long long i = 0; i < k; ++i)
        for (long long j = i + 1; j < k; ++j) {
            auto& sides = side_vertices[{i, j}];
            for (VertexId u = inst.class_begin(i); u < inst.class_end(i); ++u)
                for (VertexId v : inst.graph.neighbors(u)) {
                    if (inst.class_of(v) != j) continue;
                    Provenance p;
                    p.role = Provenance::Role::pair_vertex;
                    p.i = i;
                    p.j = j;
                    p.orig_u = u;
                    p.orig_v = v;
                    p.side = i;
                    VertexId u_side = fresh(p);
                    p.side = j;
                    VertexId v_side = fresh(p);
                    base_of[u_side] = u;
                    base_of[v_side] = v;
                    sides[0].push_back(u_side);
                    sides[1].push_back(v_side);
                    g.add_edge(copy_of[u], u_side);
                    g.add_edge(u_side, v_side);
                    g.add_edge(v_side, copy_of[v]);
                }
            // same side, different base vertex -> adjacent
            for (const auto& side : sides)
                for (std::size_t a = 0; a < side.size(); ++a)
                    for (std::size_t b = a + 1; b < side.size(); ++b)
                        if (base_of[side[a]] != base_of[side[b]]) g.add_edge(side[a], side[b]);
        }

    // class padding: keeps class copies at r+1 whatever k and d are
    std::vector<VertexId> padded;
    for (long long i = 0; i < k; ++i)
        for (long long t = 0; t < pad_class_count; ++t) {
            Provenance p;
            p.role = Provenance::Role::pad_class;
            p.i = i;
            VertexId w = fresh(p);
            for (VertexId v = inst.class_begin(i); v < inst.class_end(i); ++v)
                g.add_edge(w, copy_of[v]);
            padded.push_back(w);
        }

    // side pools: each side of a pair gadget gets its own pool so that the
    // intended deletion (one pair vertex per side) costs every pool vertex
    // exactly one neighbor
    for (auto& [ij, sides] : side_vertices)
        for (int sidx = 0; sidx < 2; ++sidx) {
            long long side_class = (sidx == 0) ? ij.first : ij.second;
            for (long long t = 0; t < pool_count; ++t) {
                Provenance p;
                p.role = Provenance::Role::pad_side;
                p.i = ij.first;
                p.j = ij.second;
                p.side = side_class;
                VertexId w = fresh(p);
                for (VertexId pv : sides[sidx]) g.add_edge(w, pv);
                padded.push_back(w);
            }
        }

    // degree fillers: broken (r+1)-cliques hanging off each padded vertex,
    // chained further until the attached mass passes g(k'), so that touching
    // any filler forces more deletions than the budget allows
    const long long mass_target = budget.g_of(red.k_prime) + 1;
    for (VertexId p : padded) {
        const long long deficit = (r + 1) - static_cast<long long>(g.degree(p));
        if (deficit == 0) continue;
        std::vector<VertexId> chain_tail; // vertices of the most recent clique
        std::set<std::pair<VertexId, VertexId>> tail_broken;
        long long mass = 0;
        long long direct = deficit / 2;
        long long built = 0;
        while (built < direct || mass < mass_target) {
            std::vector<VertexId> clique;
            clique.reserve(static_cast<std::size_t>(r + 1));
            Provenance pr;
            pr.role = Provenance::Role::filler;
            pr.owner = p;
            for (long long t = 0; t < r + 1; ++t) clique.push_back(fresh(pr));
            for (std::size_t a = 0; a < clique.size(); ++a)
                for (std::size_t b = a + 1; b < clique.size(); ++b)
                    if (!(a == 0 && b == 1)) g.add_edge(clique[a], clique[b]);
            // the broken edge {clique[0], clique[1]} reattaches either to the
            // padded vertex (direct) or to the previous clique in the chain
            if (built < direct) {
                g.add_edge(clique[0], p);
                g.add_edge(clique[1], p);
            } else {
                std::pair<VertexId, VertexId> donor{-1, -1};
                for (std::size_t a = 0; a < chain_tail.size() && donor.first == -1; ++a)
                    for (std::size_t b = a + 1; b < chain_tail.size(); ++b)
                        if (!tail_broken.count({chain_tail[a], chain_tail[b]})) {
                            donor = {chain_tail[a], chain_tail[b]};
                            break;
                        }
                if (donor.first == -1) throw CorruptState("filler clique ran out of intact edges");
                g.del_edge(donor.first, donor.second);
                g.add_edge(donor.first, clique[0]);
                g.add_edge(donor.second, clique[1]);
            }
            chain_tail = clique;
            tail_broken = {{clique[0], clique[1]}};
            mass += r + 1;
            ++built;
        }
    }
    return red;
}

// true iff every non-filler vertex sits at degree r+1 and every filler at r
inline bool degree_audit(const ReductionInstance& red) {
    for (const auto& [v, p] : red.provenance) {
        if (!red.graph.has_vertex(v)) return false;
        std::size_t want = (p.role == Provenance::Role::filler)
                               ? static_cast<std::size_t>(red.regular_degree)
                               : static_cast<std::size_t>(red.regular_degree + 1);
        if (red.graph.degree(v) != want) return false;
    }
    return red.provenance.size() == red.graph.num_vertices();
}

// per padded vertex with any fillers at all: attached filler mass > g(k')
inline bool filler_mass_ok(const ReductionInstance& red) {
    std::map<VertexId, long long> mass;
    for (const auto& [v, p] : red.provenance)
        if (p.role == Provenance::Role::filler) ++mass[p.owner];
    for (const auto& [owner, m] : mass)
        if (m < red.budget.g_of(red.k_prime) + 1) return false;
    return true;
}

// the deletion a multicolored clique dictates: its class copies plus both
// couple vertices of each clique edge
inline std::set<VertexId> intended_deletion(const ReductionInstance& red,
                                            const std::vector<VertexId>& clique) {
    std::set<VertexId> in_clique(clique.begin(), clique.end());
    std::set<VertexId> out;
    for (const auto& [v, p] : red.provenance) {
        if (p.role == Provenance::Role::class_copy && in_clique.count(p.orig_u))
            out.insert(v);
        if (p.role == Provenance::Role::pair_vertex && in_clique.count(p.orig_u) &&
            in_clique.count(p.orig_v))
            out.insert(v);
    }
    return out;
}

inline DynamicGraph delete_vertices(const DynamicGraph& g, const std::set<VertexId>& del) {
    DynamicGraph out = g;
    for (VertexId v : del) {
        std::vector<VertexId> nbrs(out.neighbors(v).begin(), out.neighbors(v).end());
        for (VertexId w : nbrs) out.del_edge(v, w);
        out.del_vertex(v);
    }
    return out;
}

namespace detail {

// Complete search for a minimum vertex set whose removal leaves the graph
// r-regular. Forced moves: a vertex below r must go; a committed survivor at
// exactly r pins all its live neighbors. Branching on a violated vertex's
// closed neighborhood, earlier candidates committed to survive, keeps the
// tree disjoint and exhaustive. Canonical result: minimum size, then
// lexicographically smallest.
class RegularDeletionSearch {
public:
    RegularDeletionSearch(const DynamicGraph& g, long long r, std::size_t budget,
                          std::size_t node_cap)
        : r_(r), budget_(budget), node_cap_(node_cap) {
        ids_ = g.vertices();
        int n = static_cast<int>(ids_.size());
        std::map<VertexId, int> index;
        for (int i = 0; i < n; ++i) index[ids_[i]] = i;
        adj_.resize(n);
        live_deg_.resize(n);
        st_.assign(n, St::live);
        for (int i = 0; i < n; ++i) {
            for (VertexId w : g.neighbors(ids_[i])) adj_[i].push_back(index[w]);
            live_deg_[i] = static_cast<long long>(adj_[i].size());
        }
    }

    std::optional<std::set<VertexId>> run() {
        rec();
        if (!best_) return std::nullopt;
        std::set<VertexId> out;
        for (int i : *best_) out.insert(ids_[i]);
        return out;
    }

private:
    enum class St : unsigned char { live, deleted, survive };

    long long r_;
    std::size_t budget_, node_cap_, nodes_ = 0;
    std::vector<VertexId> ids_;
    std::vector<std::vector<int>> adj_;
    std::vector<long long> live_deg_;
    std::vector<St> st_;
    std::vector<int> deleted_;
    std::optional<std::vector<int>> best_; // sorted indices

    struct Change {
        int v;
        St old_st;
        bool was_deletion;
    };
    std::vector<Change> trail_;

    void set_state(int v, St to) {
        trail_.push_back({v, st_[v], to == St::deleted});
        st_[v] = to;
        if (to == St::deleted) {
            deleted_.push_back(v);
            for (int w : adj_[v]) --live_deg_[w];
        }
    }

    void unwind(std::size_t mark) {
        while (trail_.size() > mark) {
            Change c = trail_.back();
            trail_.pop_back();
            if (c.was_deletion) {
                deleted_.pop_back();
                for (int w : adj_[c.v]) ++live_deg_[w];
            }
            st_[c.v] = c.old_st;
        }
    }

    // sound implications to fixpoint; false = dead end
    bool propagate() {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < static_cast<int>(st_.size()); ++v) {
                if (st_[v] == St::deleted) continue;
                if (live_deg_[v] < r_) {
                    if (st_[v] == St::survive) return false;
                    if (deleted_.size() >= budget_) return false;
                    set_state(v, St::deleted);
                    changed = true;
                    continue;
                }
                if (st_[v] == St::survive) {
                    if (live_deg_[v] - r_ >
                        static_cast<long long>(budget_ - deleted_.size()))
                        return false;
                    if (live_deg_[v] == r_) {
                        for (int w : adj_[v])
                            if (st_[w] == St::live) {
                                set_state(w, St::survive);
                                changed = true;
                            }
                    }
                }
            }
        }
        return true;
    }

    void record() {
        std::vector<int> d = deleted_;
        std::sort(d.begin(), d.end());
        if (!best_ || d.size() < best_->size() || (d.size() == best_->size() && d < *best_))
            best_ = std::move(d);
    }

    void rec() {
        if (++nodes_ > node_cap_)
            throw BudgetExceeded("verify_deletion: node budget exhausted");
        std::size_t mark = trail_.size();
        if (!propagate()) {
            unwind(mark);
            return;
        }

        // after propagation every violated vertex sits above r
        int pivot = -1;
        std::size_t pivot_options = SIZE_MAX;
        for (int v = 0; v < static_cast<int>(st_.size()); ++v) {
            if (st_[v] == St::deleted || live_deg_[v] == r_) continue;
            std::size_t options = (st_[v] == St::live) ? 1 : 0;
            for (int w : adj_[v])
                if (st_[w] == St::live) ++options;
            if (options < pivot_options) {
                pivot_options = options;
                pivot = v;
            }
        }
        if (pivot == -1) {
            record();
            unwind(mark);
            return;
        }
        if (pivot_options == 0 || deleted_.size() >= budget_ ||
            (best_ && deleted_.size() >= best_->size())) {
            unwind(mark);
            return;
        }

        std::vector<int> cands;
        if (st_[pivot] == St::live) cands.push_back(pivot);
        for (int w : adj_[pivot])
            if (st_[w] == St::live) cands.push_back(w);
        std::sort(cands.begin(), cands.end());

        // branch t deletes cands[t] while committing the earlier candidates
        // to survive: disjoint branches that jointly cover every way to fix
        // the pivot
        for (std::size_t t = 0; t < cands.size(); ++t) {
            std::size_t branch_mark = trail_.size();
            for (std::size_t e = 0; e < t; ++e) set_state(cands[e], St::survive);
            set_state(cands[t], St::deleted);
            rec();
            unwind(branch_mark);
        }
        unwind(mark);
    }
};

} // namespace detail

// Minimum-size, lexicographically-first vertex set (at most max_deletions)
// whose removal leaves the graph regular_degree-regular; nothing if no such
// set exists. The search is complete; the node cap turns pathological
// instances into an explicit BudgetExceeded instead of an open-ended stall.
inline std::optional<std::set<VertexId>> verify_deletion(const ReductionInstance& red,
                                                         std::size_t max_deletions,
                                                         std::size_t node_cap = default_node_cap) {
    detail::RegularDeletionSearch search(red.graph, red.regular_degree, max_deletions, node_cap);
    return search.run();
}

// same search for a bare graph (used by tests and hand-built cases)
inline std::optional<std::set<VertexId>> find_regular_deletion(const DynamicGraph& g, long long r,
                                                               std::size_t max_deletions,
                                                               std::size_t node_cap =
                                                                   default_node_cap) {
    detail::RegularDeletionSearch search(g, r, max_deletions, node_cap);
    return search.run();
}

// Witness decoding: a deletion set maps back when it consists of exactly one
// class copy per class and, per class pair, the two couple vertices of the
// edge joining the chosen copies — in which case the chosen source vertices
// form a multicolored clique.
inline std::optional<std::vector<VertexId>> decode_witness(const ReductionInstance& red,
                                                           const std::set<VertexId>& witness,
                                                           const SrmcInstance& inst) {
    std::vector<VertexId> chosen(static_cast<std::size_t>(red.src_k), -1);
    std::map<std::pair<long long, long long>, std::vector<const Provenance*>> pair_hits;

    for (VertexId v : witness) {
        auto it = red.provenance.find(v);
        if (it == red.provenance.end()) return std::nullopt;
        const Provenance& p = it->second;
        switch (p.role) {
            case Provenance::Role::class_copy: {
                auto& slot = chosen[static_cast<std::size_t>(p.i)];
                if (slot != -1) return std::nullopt; // two copies from one class
                slot = p.orig_u;
                break;
            }
            case Provenance::Role::pair_vertex:
                pair_hits[{p.i, p.j}].push_back(&p);
                break;
            default:
                return std::nullopt; // padding or filler in the witness
        }
    }

    for (VertexId v : chosen)
        if (v == -1) return std::nullopt;

    for (long long i = 0; i < red.src_k; ++i)
        for (long long j = i + 1; j < red.src_k; ++j) {
            auto it = pair_hits.find({i, j});
            if (it == pair_hits.end() || it->second.size() != 2) return std::nullopt;
            const Provenance *a = it->second[0], *b = it->second[1];
            if (a->side == b->side) return std::nullopt;
            if (a->orig_u != b->orig_u || a->orig_v != b->orig_v) return std::nullopt;
            if (a->orig_u != chosen[static_cast<std::size_t>(i)] ||
                a->orig_v != chosen[static_cast<std::size_t>(j)])
                return std::nullopt;
        }

    for (long long i = 0; i < red.src_k; ++i)
        for (long long j = i + 1; j < red.src_k; ++j)
            if (!inst.graph.has_edge(chosen[static_cast<std::size_t>(i)],
                                     chosen[static_cast<std::size_t>(j)]))
                return std::nullopt;
    return chosen;
}

struct EquivalenceReport {
    bool clique_found = false;
    bool deletion_found = false;
    bool consistent = false;
    bool witness_maps_back = false;
    std::optional<std::vector<VertexId>> clique;   // source instance ids
    std::optional<std::set<VertexId>> witness;     // reduced instance ids
    std::optional<std::vector<VertexId>> decoded;  // witness mapped back to source ids
};

// Run both oracles and compare their verdicts: the reduction is healthy when
// a multicolored clique exists exactly when a small deletion witness does,
// and the witness decodes back to a clique.
inline EquivalenceReport equivalence_check(const SrmcInstance& inst, const ApproxBudget& budget,
                                           std::size_t node_cap = default_node_cap) {
    EquivalenceReport rep;
    rep.clique = find_clique(inst);
    rep.clique_found = rep.clique.has_value();

    ReductionInstance red = reduce(inst, budget);
    rep.witness = verify_deletion(red, static_cast<std::size_t>(red.k_prime), node_cap);
    rep.deletion_found = rep.witness.has_value();
    rep.consistent = (rep.clique_found == rep.deletion_found);
    if (rep.deletion_found) {
        rep.decoded = decode_witness(red, *rep.witness, inst);
        rep.witness_maps_back = rep.decoded.has_value();
    }
    return rep;
}

} // namespace dynmaint
