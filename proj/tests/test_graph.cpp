#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <dynmaint/edit.hpp>
#include <dynmaint/graph.hpp>
#include <dynmaint/rng.hpp>

using namespace dynmaint;

namespace {

DynamicGraph path4() {
    // 1-2-3-4
    DynamicGraph g = DynamicGraph::edgeless(0);
    for (VertexId v : {1, 2, 3, 4}) g.add_vertex(v);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(3, 4);
    return g;
}

} // namespace

TEST_CASE("edgeless factory gives ids 0..n-1 and no edges", "[graph]") {
    DynamicGraph g = DynamicGraph::edgeless(4);
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 0);
    CHECK(g.vertices() == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(g.max_degree() == 0);

    DynamicGraph empty = DynamicGraph::edgeless(0);
    CHECK(empty.num_vertices() == 0);
}

TEST_CASE("edge and vertex mutations enforce their preconditions", "[graph]") {
    DynamicGraph g = DynamicGraph::edgeless(3);

    g.add_edge(0, 1);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0)); // undirected
    CHECK(g.degree(0) == 1);
    CHECK(g.num_edges() == 1);

    CHECK_THROWS_AS(g.add_edge(0, 1), PreconditionViolation);  // duplicate
    CHECK_THROWS_AS(g.add_edge(1, 0), PreconditionViolation);  // duplicate, flipped
    CHECK_THROWS_AS(g.add_edge(2, 2), PreconditionViolation);  // loop
    CHECK_THROWS_AS(g.add_edge(0, 9), PreconditionViolation);  // absent endpoint
    CHECK_THROWS_AS(g.del_edge(0, 2), PreconditionViolation);  // absent edge
    CHECK_THROWS_AS(g.add_vertex(2), PreconditionViolation);   // already present
    CHECK_THROWS_AS(g.del_vertex(0), PreconditionViolation);   // not isolated
    CHECK_THROWS_AS(g.del_vertex(7), PreconditionViolation);   // absent

    g.del_edge(0, 1);
    CHECK(g.num_edges() == 0);
    g.del_vertex(0);
    CHECK_FALSE(g.has_vertex(0));
    CHECK(g.num_vertices() == 2);

    CHECK_THROWS_AS(g.neighbors(0), UnknownVertex);
    CHECK_THROWS_AS(g.degree(0), UnknownVertex);
}

TEST_CASE("apply_edit covers the four op kinds", "[graph][edit]") {
    // ({1,2}, no edges) + AddEdge(1,2)
    DynamicGraph g = DynamicGraph::edgeless(0);
    g.add_vertex(1);
    g.add_vertex(2);
    apply_edit(g, EditOp::add_edge_op(1, 2));
    CHECK(g.has_edge(1, 2));

    // + DelEdge(1,2) -> back to no edges
    apply_edit(g, EditOp::del_edge_op(1, 2));
    CHECK(g.num_edges() == 0);

    // ({1}, no edges) + DelVertex(1) -> empty graph
    DynamicGraph h = DynamicGraph::edgeless(0);
    h.add_vertex(1);
    apply_edit(h, EditOp::del_vertex_op(1));
    CHECK(h.num_vertices() == 0);

    apply_edit(h, EditOp::add_vertex_op(5));
    CHECK(h.has_vertex(5));
}

TEST_CASE("vertices and edges come back in ascending order", "[graph]") {
    DynamicGraph g = DynamicGraph::edgeless(0);
    for (VertexId v : {9, 3, 7, 1}) g.add_vertex(v);
    g.add_edge(7, 9);
    g.add_edge(1, 9);
    g.add_edge(3, 7);

    CHECK(g.vertices() == std::vector<VertexId>{1, 3, 7, 9});
    std::vector<std::pair<VertexId, VertexId>> want{{1, 9}, {3, 7}, {7, 9}};
    CHECK(g.edges() == want);
}

TEST_CASE("regularity checks", "[graph]") {
    DynamicGraph triangle = DynamicGraph::edgeless(3);
    triangle.add_edge(0, 1);
    triangle.add_edge(1, 2);
    triangle.add_edge(0, 2);
    CHECK(triangle.is_regular(2));
    CHECK_FALSE(triangle.is_regular(1));

    DynamicGraph star = DynamicGraph::edgeless(4); // K_{1,3}
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK_FALSE(star.is_regular(1));
    CHECK(star.max_degree() == 3);

    DynamicGraph k6 = DynamicGraph::edgeless(6);
    for (VertexId u = 0; u < 6; ++u)
        for (VertexId v = u + 1; v < 6; ++v) k6.add_edge(u, v);
    CHECK(k6.is_regular(5));

    CHECK(DynamicGraph::edgeless(0).is_regular(3)); // vacuous
}

TEST_CASE("distance_from measures hops and flags absence", "[graph]") {
    DynamicGraph g = path4();

    CHECK(distance_from(g, {1}, 4) == 3);
    CHECK(distance_from(g, {1}, 1) == 0);
    CHECK(distance_from(g, {1, 4}, 3) == 1); // nearer source wins

    DynamicGraph star = DynamicGraph::edgeless(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(distance_from(star, {0}, 2) == 1);

    g.add_vertex(99); // disconnected
    CHECK_FALSE(distance_from(g, {1}, 99).has_value());

    CHECK_THROWS_AS(distance_from(g, {1}, 1000), UnknownVertex);
    CHECK_THROWS_AS(distance_from(g, {1000}, 1), UnknownVertex);
    CHECK_THROWS_AS(distance_from(g, {}, 1), PreconditionViolation);
}

TEST_CASE("bfs_distances tolerates absent sources without expanding them", "[graph]") {
    DynamicGraph g = path4();
    auto dist = bfs_distances(g, {42, 2});
    CHECK(dist.at(42) == 0); // the just-deleted-vertex case
    CHECK(dist.at(2) == 0);
    CHECK(dist.at(4) == 2);
    CHECK(dist.count(42) == 1);
}

TEST_CASE("connected_components partitions the vertex set", "[graph]") {
    DynamicGraph g = DynamicGraph::edgeless(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(4, 5);
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    std::size_t total = 0;
    for (const auto& c : comps) total += c.size();
    CHECK(total == 6);
}

TEST_CASE("graph equality is structural", "[graph]") {
    DynamicGraph a = DynamicGraph::edgeless(3);
    a.add_edge(0, 1);
    a.add_edge(1, 2);
    DynamicGraph b = DynamicGraph::edgeless(3);
    b.add_edge(1, 2);
    b.add_edge(0, 1);
    CHECK(a == b);
    b.del_edge(0, 1);
    CHECK(a != b);
}

TEST_CASE("edit ops normalize endpoints and print stably", "[edit]") {
    EditOp op = EditOp::add_edge_op(5, 2);
    CHECK(op.u == 2);
    CHECK(op.v == 5);
    CHECK(to_string(op) == "AE 2 5");
    CHECK(to_string(EditOp::del_edge_op(9, 1)) == "DE 1 9");
    CHECK(to_string(EditOp::add_vertex_op(3)) == "AV 3");
    CHECK(to_string(EditOp::del_vertex_op(3)) == "DV 3");

    CHECK(op.endpoints() == std::vector<VertexId>{2, 5});
    CHECK(EditOp::add_vertex_op(3).endpoints() == std::vector<VertexId>{3});

    CHECK_THROWS_AS(EditOp::add_edge_op(4, 4), PreconditionViolation);
}

TEST_CASE("precondition_holds mirrors apply_edit exactly", "[edit]") {
    DynamicGraph g = DynamicGraph::edgeless(3);
    g.add_edge(0, 1);

    CHECK(precondition_holds(g, EditOp::add_edge_op(1, 2)));
    CHECK_FALSE(precondition_holds(g, EditOp::add_edge_op(0, 1)));
    CHECK(precondition_holds(g, EditOp::del_edge_op(0, 1)));
    CHECK_FALSE(precondition_holds(g, EditOp::del_edge_op(1, 2)));
    CHECK(precondition_holds(g, EditOp::add_vertex_op(9)));
    CHECK_FALSE(precondition_holds(g, EditOp::add_vertex_op(2)));
    CHECK(precondition_holds(g, EditOp::del_vertex_op(2)));
    CHECK_FALSE(precondition_holds(g, EditOp::del_vertex_op(0))); // has an edge
}

TEST_CASE("inverse ops undo a script back to the start", "[edit]") {
    // randomized round-trip: apply ops, then inverses in reverse
    Rng rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        EditScript script = churn_script(8, 60, 0.5, 500 + trial);
        DynamicGraph g0 = DynamicGraph::edgeless(script.initial_n);
        DynamicGraph g = g0;
        for (const EditOp& op : script.ops) apply_edit(g, op);
        for (auto it = script.ops.rbegin(); it != script.ops.rend(); ++it)
            apply_edit(g, inverse_of(*it));
        CHECK(g == g0);
    }
    CHECK(inverse_of(EditOp::add_vertex_op(4)) == EditOp::del_vertex_op(4));
    CHECK(inverse_of(EditOp::del_edge_op(1, 2)) == EditOp::add_edge_op(1, 2));
}

TEST_CASE("build_script_edge_by_edge replays to the target", "[edit]") {
    SECTION("triangle on {1,2,3} relabels to 0..2") {
        DynamicGraph target = DynamicGraph::edgeless(0);
        for (VertexId v : {1, 2, 3}) target.add_vertex(v);
        target.add_edge(1, 2);
        target.add_edge(2, 3);
        target.add_edge(1, 3);

        EditScript script = build_script_edge_by_edge(target, 0);
        REQUIRE(script.ops.size() == 3);
        CHECK(script.initial_n == 3);
        DynamicGraph g = DynamicGraph::edgeless(script.initial_n);
        for (const EditOp& op : script.ops) apply_edit(g, op);
        DynamicGraph want = DynamicGraph::edgeless(3);
        want.add_edge(0, 1);
        want.add_edge(1, 2);
        want.add_edge(0, 2);
        CHECK(g == want);
    }

    SECTION("edgeless target gives an empty op list") {
        EditScript script = build_script_edge_by_edge(DynamicGraph::edgeless(5), 3);
        CHECK(script.initial_n == 5);
        CHECK(script.ops.empty());
    }

    SECTION("different seeds permute the same op multiset") {
        DynamicGraph target = DynamicGraph::edgeless(3);
        target.add_edge(0, 1);
        target.add_edge(1, 2);
        EditScript a = build_script_edge_by_edge(target, 0);
        EditScript b = build_script_edge_by_edge(target, 1);
        auto key = [](const EditOp& op) { return std::make_pair(op.u, op.v); };
        std::multiset<std::pair<VertexId, VertexId>> ma, mb;
        for (const EditOp& op : a.ops) ma.insert(key(op));
        for (const EditOp& op : b.ops) mb.insert(key(op));
        CHECK(ma == mb);
    }

    SECTION("identity-labeled targets replay to an equal graph") {
        Rng rng(21);
        for (int trial = 0; trial < 10; ++trial) {
            DynamicGraph target = DynamicGraph::edgeless(9);
            for (VertexId u = 0; u < 9; ++u)
                for (VertexId v = u + 1; v < 9; ++v)
                    if (rng.coin()) target.add_edge(u, v);
            EditScript script = build_script_edge_by_edge(target, trial);
            DynamicGraph g = DynamicGraph::edgeless(script.initial_n);
            for (const EditOp& op : script.ops) apply_edit(g, op);
            CHECK(g == target);
        }
    }
}

TEST_CASE("churn_script basics", "[edit]") {
    SECTION("two vertices, one forced add") {
        EditScript script = churn_script(2, 1, 1.0, 123);
        REQUIRE(script.ops.size() == 1);
        CHECK(script.ops[0] == EditOp::add_edge_op(0, 1));
    }

    SECTION("deterministic per seed") {
        EditScript a = churn_script(10, 1000, 0.5, 7);
        EditScript b = churn_script(10, 1000, 0.5, 7);
        REQUIRE(a.ops.size() == b.ops.size());
        CHECK(a.initial_n == b.initial_n);
        CHECK(std::equal(a.ops.begin(), a.ops.end(), b.ops.begin()));
        EditScript c = churn_script(10, 1000, 0.5, 8);
        CHECK_FALSE(std::equal(a.ops.begin(), a.ops.end(), c.ops.begin()));
    }

    SECTION("degenerate when no edge op can exist") {
        CHECK_THROWS_AS(churn_script(1, 5, 0.5, 1), Degenerate);
        CHECK_THROWS_AS(churn_script(0, 1, 0.5, 1), Degenerate);
        CHECK_NOTHROW(churn_script(1, 0, 0.5, 1));
    }

    SECTION("pool fallback keeps op counts exact at extreme p") {
        // p_add = 0 on an edgeless start can only add; fallback kicks in
        EditScript script = churn_script(4, 10, 0.0, 9);
        CHECK(script.ops.size() == 10);
        CHECK(script.ops[0].kind == EditOp::Kind::add_edge);
        // p_add = 1 eventually saturates K_4 (6 edges) and must delete
        EditScript sat = churn_script(4, 10, 1.0, 9);
        CHECK(sat.ops.size() == 10);
        bool saw_del = false;
        for (const EditOp& op : sat.ops) saw_del |= op.kind == EditOp::Kind::del_edge;
        CHECK(saw_del);
    }
}

TEST_CASE("churn scripts replay cleanly over ten thousand ops", "[edit]") {
    // every prefix is a valid script; graph stays simple and undirected
    EditScript script = churn_script(30, 10000, 0.55, 424242);
    REQUIRE(script.ops.size() == 10000);
    DynamicGraph g = DynamicGraph::edgeless(script.initial_n);
    std::size_t checked = 0;
    for (const EditOp& op : script.ops) {
        REQUIRE(precondition_holds(g, op));
        apply_edit(g, op);
        if (++checked % 500 == 0) {
            // spot-check symmetry of the adjacency relation
            for (auto [u, v] : g.edges()) {
                REQUIRE(g.has_edge(v, u));
                REQUIRE(u < v);
            }
        }
    }
    CHECK(g.num_vertices() == 30);
}

TEST_CASE("rng draws are deterministic and in range", "[rng]") {
    Rng a(99), b(99);
    for (int i = 0; i < 1000; ++i) CHECK(a.raw() == b.raw());

    Rng c(7);
    for (int i = 0; i < 1000; ++i) {
        std::uint64_t x = c.below(17);
        CHECK(x < 17);
    }
    CHECK(c.below(1) == 0);

    Rng d(7);
    for (int i = 0; i < 200; ++i) {
        std::uint64_t x = d.between(5, 9);
        CHECK(x >= 5);
        CHECK(x <= 9);
    }

    Rng e1(1), e2(2);
    bool differ = false;
    for (int i = 0; i < 64 && !differ; ++i) differ = e1.raw() != e2.raw();
    CHECK(differ);

    std::vector<int> v1{1, 2, 3, 4, 5, 6, 7, 8}, v2 = v1;
    Rng s1(3), s2(3);
    s1.shuffle(v1);
    s2.shuffle(v2);
    CHECK(v1 == v2);
}
