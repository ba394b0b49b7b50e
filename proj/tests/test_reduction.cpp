#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

#include <dynmaint/reduction.hpp>
#include <dynmaint/rng.hpp>
#include <dynmaint/srmc.hpp>

#include "brute.hpp"

using namespace dynmaint;

namespace {

DynamicGraph random_graph(Rng& rng, long long n, int pct) {
    DynamicGraph g = DynamicGraph::edgeless(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(pct)) g.add_edge(u, v);
    return g;
}

bool is_clique_in(const DynamicGraph& g, const std::vector<VertexId>& vs) {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (!g.has_edge(vs[a], vs[b])) return false;
    return true;
}

} // namespace

TEST_CASE("degree target is minimal above both base degrees with flipped parity", "[reduction]") {
    CHECK(compute_r(2, 2, 1) == 5);
    CHECK(compute_r(3, 2, 1) == 5);
    CHECK(compute_r(2, 2, 2) == 5);
    CHECK(compute_r(3, 2, 2) == 7);
    CHECK(compute_r(2, 4, 2) == 9);

    for (long long k = 2; k <= 5; ++k)
        for (long long s = 2; s <= 8; s += 2)
            for (long long d = 1; d <= s; ++d) {
                long long r = compute_r(k, s, d);
                long long bound = std::max((s - 1) + d * (k - 1), 2 + (s - 1) * d);
                CHECK(r > bound);
                CHECK(r % 2 != s % 2);
                // nothing smaller qualifies
                CHECK((r - 1 <= bound || (r - 1) % 2 == s % 2));
            }
}

TEST_CASE("srmc parameters are validated up front", "[reduction]") {
    CHECK_THROWS_AS(gen_srmc(1, 2, 1, 0, false), InfeasibleParameters);
    CHECK_THROWS_AS(gen_srmc(2, 3, 1, 0, false), OddClassSize);
    CHECK_THROWS_AS(gen_srmc(2, 0, 1, 0, false), InfeasibleParameters);
    CHECK_THROWS_AS(gen_srmc(2, 4, 0, 0, false), InfeasibleParameters);
    CHECK_THROWS_AS(gen_srmc(2, 4, 5, 0, false), InfeasibleParameters);
    CHECK_THROWS_AS(compute_r(2, 3, 1), OddClassSize);
}

TEST_CASE("generated instances are strongly regular with independent classes", "[reduction]") {
    struct Params {
        long long k, s, d;
    };
    for (Params p : {Params{2, 2, 1}, Params{3, 4, 2}, Params{2, 6, 3}, Params{4, 4, 4}}) {
        SrmcInstance inst = gen_srmc(p.k, p.s, p.d, 42, false);
        CHECK(inst.graph.num_vertices() == static_cast<std::size_t>(p.k * p.s));
        CHECK(inst.planted.empty());
        // the validating factory re-checks the regularity contract in full
        CHECK_NOTHROW(make_srmc_instance(inst.graph, p.k, p.s, p.d));
    }
}

TEST_CASE("planting designates a multicolored clique", "[reduction]") {
    SrmcInstance inst = gen_srmc(3, 6, 2, 7, true);
    REQUIRE(inst.planted.size() == 3);
    for (long long i = 0; i < 3; ++i) CHECK(inst.class_of(inst.planted[i]) == i);
    CHECK(is_clique_in(inst.graph, inst.planted));
    CHECK_NOTHROW(make_srmc_instance(inst.graph, 3, 6, 2));
}

TEST_CASE("generation is seed-deterministic", "[reduction]") {
    SrmcInstance a = gen_srmc(3, 4, 2, 99, true);
    SrmcInstance b = gen_srmc(3, 4, 2, 99, true);
    CHECK(a.graph == b.graph);
    CHECK(a.planted == b.planted);
    SrmcInstance c = gen_srmc(3, 4, 2, 100, true);
    CHECK(a.graph != c.graph);
}

TEST_CASE("the validating factory rejects malformed instances", "[reduction]") {
    CHECK_THROWS_AS(make_srmc_instance(DynamicGraph::edgeless(3), 2, 2, 1),
                    PreconditionViolation);
    // right size, wrong structure: no edges at all
    CHECK_THROWS_AS(make_srmc_instance(DynamicGraph::edgeless(4), 2, 2, 1),
                    PreconditionViolation);
    // intra-class edge sneaks in
    SrmcInstance inst = gen_srmc(2, 4, 1, 5, false);
    DynamicGraph g = inst.graph;
    g.add_edge(0, 1);
    CHECK_THROWS_AS(make_srmc_instance(g, 2, 4, 1), PreconditionViolation);
}

TEST_CASE("clique search returns the first hit in class-product order", "[reduction]") {
    SECTION("planted instances always have one") {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            SrmcInstance inst = gen_srmc(3, 4, 1, seed, true);
            auto clique = find_clique(inst);
            REQUIRE(clique.has_value());
            CHECK(is_clique_in(inst.graph, *clique));
            for (long long i = 0; i < 3; ++i) CHECK(inst.class_of((*clique)[i]) == i);
        }
    }
    SECTION("d=1 matching instances start the canonical clique at vertex 0") {
        SrmcInstance inst = gen_srmc(2, 4, 1, 3, false);
        auto clique = find_clique(inst);
        REQUIRE(clique.has_value()); // a perfect matching always pairs vertex 0
        CHECK((*clique)[0] == 0);
        CHECK(inst.graph.has_edge((*clique)[0], (*clique)[1]));
    }
    SECTION("the cross-product budget trips on huge k") {
        SrmcInstance inst = gen_srmc(24, 2, 1, 1, false);
        CHECK_THROWS_AS(find_clique(inst), BudgetExceeded);
    }
}

TEST_CASE("the gadget build hits its size and degree contract", "[reduction]") {
    SrmcInstance inst = gen_srmc(2, 2, 1, 1, true);
    ReductionInstance red = reduce(inst, ApproxBudget{1, 0});

    CHECK(red.k_prime == 4);
    CHECK(red.regular_degree == 5);
    CHECK(red.graph.num_vertices() == 190);
    CHECK(red.graph.num_edges() == 486);
    CHECK(red.provenance.size() == red.graph.num_vertices());
    CHECK(degree_audit(red));
    CHECK(filler_mass_ok(red));

    std::map<Provenance::Role, long long> count;
    for (const auto& [v, p] : red.provenance) ++count[p.role];
    CHECK(count[Provenance::Role::class_copy] == 4);
    CHECK(count[Provenance::Role::pair_vertex] == 4);
    CHECK(count[Provenance::Role::pad_class] == 8);
    CHECK(count[Provenance::Role::pad_side] == 6);
    CHECK(count[Provenance::Role::filler] == 168);
}

TEST_CASE("build size scales with the parameters, not the seed", "[reduction]") {
    CHECK(reduce(gen_srmc(2, 2, 2, 1, true), {}).graph.num_vertices() == 118);
    CHECK(reduce(gen_srmc(2, 2, 2, 9, false), {}).graph.num_vertices() == 118);
    CHECK(reduce(gen_srmc(3, 2, 1, 4, true), {}).graph.num_vertices() == 369);
    CHECK(reduce(gen_srmc(3, 2, 2, 4, true), {}).graph.num_vertices() == 663);
}

TEST_CASE("the planted clique's deletion restores regularity", "[reduction]") {
    struct Params {
        long long k, s, d;
    };
    for (Params p : {Params{2, 2, 1}, Params{3, 2, 1}, Params{2, 4, 2}, Params{3, 2, 2}}) {
        SrmcInstance inst = gen_srmc(p.k, p.s, p.d, 11, true);
        ReductionInstance red = reduce(inst, ApproxBudget{1, 0});
        REQUIRE(degree_audit(red));
        REQUIRE(filler_mass_ok(red));

        auto clique = find_clique(inst);
        REQUIRE(clique.has_value());
        std::set<VertexId> del = intended_deletion(red, *clique);
        CHECK(del.size() == static_cast<std::size_t>(red.k_prime));

        DynamicGraph rest = delete_vertices(red.graph, del);
        CHECK(rest.num_vertices() == red.graph.num_vertices() - del.size());
        CHECK(rest.num_vertices() > 0);
        CHECK(rest.is_regular(static_cast<std::size_t>(red.regular_degree)));
    }
}

TEST_CASE("the minimum witness is exactly the clique budget, never less", "[reduction]") {
    SrmcInstance inst = gen_srmc(2, 2, 1, 1, true);
    ReductionInstance red = reduce(inst, ApproxBudget{1, 0});

    CHECK_FALSE(verify_deletion(red, static_cast<std::size_t>(red.k_prime) - 1).has_value());

    auto witness = verify_deletion(red, static_cast<std::size_t>(red.k_prime));
    REQUIRE(witness.has_value());
    CHECK(witness->size() == static_cast<std::size_t>(red.k_prime));
    CHECK(delete_vertices(red.graph, *witness)
              .is_regular(static_cast<std::size_t>(red.regular_degree)));

    auto decoded = decode_witness(red, *witness, inst);
    REQUIRE(decoded.has_value());
    CHECK(is_clique_in(inst.graph, *decoded));
    // a decodable witness is literally the decoded clique's intended deletion
    CHECK(*witness == intended_deletion(red, *decoded));
    // and here the lex-smallest witness matches the canonical clique
    CHECK(*decoded == *find_clique(inst));
}

TEST_CASE("witness decoding rejects sets that are not clique-shaped", "[reduction]") {
    SrmcInstance inst = gen_srmc(2, 2, 1, 1, true);
    ReductionInstance red = reduce(inst, ApproxBudget{1, 0});
    auto witness = verify_deletion(red, static_cast<std::size_t>(red.k_prime));
    REQUIRE(witness.has_value());

    SECTION("dropping a vertex breaks the pair structure") {
        std::set<VertexId> cut = *witness;
        cut.erase(*cut.rbegin());
        CHECK_FALSE(decode_witness(red, cut, inst).has_value());
    }
    SECTION("a filler vertex never decodes") {
        std::set<VertexId> bad = *witness;
        for (const auto& [v, p] : red.provenance)
            if (p.role == Provenance::Role::filler) {
                bad.insert(v);
                break;
            }
        CHECK_FALSE(decode_witness(red, bad, inst).has_value());
    }
    SECTION("an id outside the build never decodes") {
        std::set<VertexId> bad = *witness;
        bad.insert(1'000'000);
        CHECK_FALSE(decode_witness(red, bad, inst).has_value());
    }
}

TEST_CASE("both oracle directions agree on planted and unplanted inputs", "[reduction]") {
    SECTION("planted yes-instances round-trip") {
        for (std::uint64_t seed : {1, 2, 3}) {
            EquivalenceReport rep = equivalence_check(gen_srmc(2, 2, 1, seed, true), {});
            CHECK(rep.clique_found);
            CHECK(rep.deletion_found);
            CHECK(rep.consistent);
            CHECK(rep.witness_maps_back);
        }
    }
    SECTION("unplanted instances stay consistent either way") {
        bool saw_no = false;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            EquivalenceReport rep = equivalence_check(gen_srmc(3, 2, 1, seed, false), {});
            CHECK(rep.consistent);
            if (rep.deletion_found) CHECK(rep.witness_maps_back);
            if (!rep.clique_found) saw_no = true;
        }
        CHECK(saw_no); // at least one genuine no-instance in this seed range
    }
}

TEST_CASE("padding becomes infeasible when the pools run out of degree", "[reduction]") {
    SrmcInstance inst = gen_srmc(2, 6, 6, 1, false);
    CHECK_THROWS_AS(reduce(inst, ApproxBudget{1, 0}), InfeasibleParameters);
    CHECK_THROWS_AS(reduce(gen_srmc(2, 2, 1, 1, true), ApproxBudget{0, 5}), InfeasibleParameters);
}

TEST_CASE("a looser deletion allowance chains extra filler mass", "[reduction]") {
    SrmcInstance inst = gen_srmc(2, 2, 1, 1, true);
    ReductionInstance base = reduce(inst, ApproxBudget{1, 0});
    ReductionInstance wide = reduce(inst, ApproxBudget{3, 0});

    CHECK(wide.graph.num_vertices() > base.graph.num_vertices());
    CHECK(degree_audit(wide));
    CHECK(filler_mass_ok(wide));

    std::map<VertexId, long long> mass;
    for (const auto& [v, p] : wide.provenance)
        if (p.role == Provenance::Role::filler) ++mass[p.owner];
    for (const auto& [owner, m] : mass) CHECK(m > wide.budget.g_of(wide.k_prime));

    // the wider build still says yes with the same tight witness size
    auto witness = verify_deletion(wide, static_cast<std::size_t>(wide.k_prime));
    REQUIRE(witness.has_value());
    CHECK(witness->size() == static_cast<std::size_t>(wide.k_prime));
}

TEST_CASE("the deletion search matches exhaustive enumeration on small graphs", "[reduction]") {
    Rng rng(2026);
    for (int trial = 0; trial < 300; ++trial) {
        long long n = 5 + static_cast<long long>(rng.below(3));
        DynamicGraph g = random_graph(rng, n, 35 + static_cast<int>(rng.below(30)));
        long long r = 1 + static_cast<long long>(rng.below(2));
        std::size_t max_del = static_cast<std::size_t>(n) - 2;

        auto fast = find_regular_deletion(g, r, max_del);
        auto slow = brute::min_regular_deletion(g, r, max_del);
        if (slow.has_value()) {
            REQUIRE(fast.has_value());
            CHECK(*fast == *slow); // same size and same lexicographic winner
        } else {
            CHECK_FALSE(fast.has_value());
        }
    }
}

TEST_CASE("the deletion search reports node-budget exhaustion", "[reduction]") {
    SrmcInstance inst = gen_srmc(2, 2, 1, 1, true);
    ReductionInstance red = reduce(inst, ApproxBudget{1, 0});
    CHECK_THROWS_AS(verify_deletion(red, static_cast<std::size_t>(red.k_prime), 1),
                    BudgetExceeded);
}
