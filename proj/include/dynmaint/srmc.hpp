#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "rng.hpp"

namespace dynmaint {

// Strongly regular multicolored instance: k classes of s vertices, class i
// occupying global ids [i*s, (i+1)*s); every vertex has exactly d neighbors
// in every other class and none in its own.
struct SrmcInstance {
    long long k = 0;
    long long s = 0;
    long long d = 0;
    DynamicGraph graph;
    std::vector<VertexId> planted; // one vertex per class when planted, else empty

    long long class_of(VertexId v) const { return v / s; }
    VertexId class_begin(long long i) const { return i * s; }
    VertexId class_end(long long i) const { return (i + 1) * s; }
};

namespace detail {

inline void check_srmc_parameters(long long k, long long s, long long d) {
    if (k < 2) throw InfeasibleParameters("need k >= 2, got " + std::to_string(k));
    if (s < 2) throw InfeasibleParameters("need s >= 2, got " + std::to_string(s));
    if (s % 2 != 0) throw OddClassSize("class size must be even, got " + std::to_string(s));
    if (d < 1 || d > s)
        throw InfeasibleParameters("need 1 <= d <= s, got d = " + std::to_string(d));
}

} // namespace detail

// Validating factory for hand-built graphs: refuses anything that is not
// strongly regular with independent classes.
inline SrmcInstance make_srmc_instance(DynamicGraph graph, long long k, long long s, long long d) {
    detail::check_srmc_parameters(k, s, d);
    if (static_cast<long long>(graph.num_vertices()) != k * s)
        throw PreconditionViolation("srmc graph must have k*s vertices");
    SrmcInstance inst{k, s, d, std::move(graph), {}};
    for (VertexId v = 0; v < k * s; ++v) {
        if (!inst.graph.has_vertex(v)) throw PreconditionViolation("srmc ids must be 0..ks-1");
        std::vector<long long> per_class(static_cast<std::size_t>(k), 0);
        for (VertexId w : inst.graph.neighbors(v))
            ++per_class[static_cast<std::size_t>(inst.class_of(w))];
        for (long long j = 0; j < k; ++j) {
            long long want = (j == inst.class_of(v)) ? 0 : d;
            if (per_class[static_cast<std::size_t>(j)] != want)
                throw PreconditionViolation("vertex " + std::to_string(v) + " has " +
                                            std::to_string(per_class[static_cast<std::size_t>(j)]) +
                                            " neighbors in class " + std::to_string(j) +
                                            ", want " + std::to_string(want));
        }
    }
    return inst;
}

// Seeded generator. Cross-class edges between classes i < j are the union
// of d disjoint perfect matchings pi_t(x) = sigma(tau(x) + t mod s) for
// t = 0..d-1; distinct shifts keep the matchings disjoint for any d <= s,
// so construction never needs retries. Planting designates one vertex per
// class and pins sigma/tau so that pi_0 joins each designated pair.
inline SrmcInstance gen_srmc(long long k, long long s, long long d, std::uint64_t seed,
                             bool planted) {
    detail::check_srmc_parameters(k, s, d);

    Rng rng(seed);
    SrmcInstance inst;
    inst.k = k;
    inst.s = s;
    inst.d = d;
    inst.graph = DynamicGraph::edgeless(k * s);

    std::vector<long long> planted_local(static_cast<std::size_t>(k), 0);
    if (planted) {
        for (long long i = 0; i < k; ++i) {
            planted_local[static_cast<std::size_t>(i)] =
                static_cast<long long>(rng.below(static_cast<std::uint64_t>(s)));
            inst.planted.push_back(i * s + planted_local[static_cast<std::size_t>(i)]);
        }
    }

    auto random_perm = [&](long long n) {
        std::vector<long long> p(static_cast<std::size_t>(n));
        for (long long x = 0; x < n; ++x) p[static_cast<std::size_t>(x)] = x;
        rng.shuffle(p);
        return p;
    };

    for (long long i = 0; i < k; ++i) {
        for (long long j = i + 1; j < k; ++j) {
            std::vector<long long> tau = random_perm(s);
            std::vector<long long> sigma = random_perm(s);
            if (planted) {
                // force sigma(tau(a)) = b for the designated pair
                long long a = planted_local[static_cast<std::size_t>(i)];
                long long b = planted_local[static_cast<std::size_t>(j)];
                long long pos = tau[static_cast<std::size_t>(a)];
                long long cur = -1;
                for (long long x = 0; x < s; ++x)
                    if (sigma[static_cast<std::size_t>(x)] == b) {
                        cur = x;
                        break;
                    }
                std::swap(sigma[static_cast<std::size_t>(pos)],
                          sigma[static_cast<std::size_t>(cur)]);
            }
            for (long long t = 0; t < d; ++t)
                for (long long x = 0; x < s; ++x) {
                    long long y = sigma[static_cast<std::size_t>(
                        (tau[static_cast<std::size_t>(x)] + t) % s)];
                    inst.graph.add_edge(i * s + x, j * s + y);
                }
        }
    }
    return inst;
}

// Exhaustive multicolored-clique search over the class cross-product in
// ascending order; the first hit is the canonical witness.
inline std::optional<std::vector<VertexId>> find_clique(const SrmcInstance& inst) {
    double budget = 1;
    for (long long i = 0; i < inst.k; ++i) {
        budget *= static_cast<double>(inst.s);
        if (budget > 1e7)
            throw BudgetExceeded("find_clique: s^k exceeds 10^7");
    }

    std::vector<VertexId> pick(static_cast<std::size_t>(inst.k), 0);
    auto compatible = [&](long long depth) {
        VertexId v = pick[static_cast<std::size_t>(depth)];
        for (long long i = 0; i < depth; ++i)
            if (!inst.graph.has_edge(pick[static_cast<std::size_t>(i)], v)) return false;
        return true;
    };

    long long depth = 0;
    std::vector<long long> idx(static_cast<std::size_t>(inst.k), 0);
    while (depth >= 0) {
        if (idx[static_cast<std::size_t>(depth)] == inst.s) {
            idx[static_cast<std::size_t>(depth)] = 0;
            --depth;
            if (depth >= 0) ++idx[static_cast<std::size_t>(depth)];
            continue;
        }
        pick[static_cast<std::size_t>(depth)] =
            inst.class_begin(depth) + idx[static_cast<std::size_t>(depth)];
        if (!compatible(depth)) {
            ++idx[static_cast<std::size_t>(depth)];
            continue;
        }
        if (depth + 1 == inst.k) return pick;
        ++depth;
    }
    return std::nullopt;
}

} // namespace dynmaint
