#include "ccls/lifted.hpp"

#include <doctest.h>

#include <set>

using namespace ccls;

namespace {

std::set<VertexCode> code_set(const std::vector<VertexCode>& v) {
    return {v.begin(), v.end()};
}

SimLSInstance seeded_sim(std::shared_ptr<const ExplicitGraph> h, int gadget, uint64_t seed) {
    Rng rng = seeded_rng(seed);
    QueryInstance q = distinctify(random_query(h, 9, rng));
    return simls_build(q, gadget, seed ^ 0xabcdULL);
}

} // namespace

TEST_CASE("tree graph shape at a=1") {
    auto k4 = complete_graph(4);
    CHECK_THROWS_AS(build_tree_graph(complete_graph(5), 2), std::invalid_argument); // not 3-regular
    CHECK_THROWS_AS(build_tree_graph(k4, 3), std::invalid_argument);                // not a power of 2

    auto g = build_tree_graph(k4, 2);
    // one double tree has 2*15 - 1 = 29 vertices
    CHECK(*g->vertex_count() == 4ull * 2 * 29);
    CHECK(g->depth_bits() == 3);

    // out-tree leaf count is M^3 = 8
    int leaves = 0;
    for (uint64_t i = 0; i < *g->vertex_count(); ++i) {
        VertexCode v = g->vertex_at(i);
        if (v[0] == 0 && v[1] == 0 && g->is_out_leaf(v))
            ++leaves;
    }
    CHECK(leaves == 8);

    // exhaustive degree scan: max degree 4, oracle symmetric, codes valid
    for (uint64_t i = 0; i < *g->vertex_count(); ++i) {
        VertexCode v = g->vertex_at(i);
        CHECK(g->index_of(v) == i);
        auto nb = g->neighbors(v);
        CHECK(nb.size() <= 4);
        CHECK(code_set(nb).size() == nb.size());
        for (const auto& u : nb) {
            CHECK(g->contains(u));
            auto back = g->neighbors(u);
            CHECK(std::count(back.begin(), back.end(), v) == 1);
        }
        // roots and out-leaves have degree exactly 4; in-leaves exactly 4
        if (v[3] == 0 || v[3] == g->depth_bits())
            CHECK(nb.size() == 4);
        else
            CHECK(nb.size() == 3);
    }
}

TEST_CASE("lifted potential levels") {
    auto k4 = complete_graph(4);
    SimLSInstance sim = seeded_sim(k4, 2, 1);
    auto g = build_tree_graph(k4, 2);
    ValueFn f = lift_potential(g, sim);
    const Value a = 1;
    for (int h = 0; h < 4; ++h)
        for (int i = 0; i < 2; ++i) {
            Value base = sim.arrays[h][i];
            CHECK(f({h, i, 0, 0, 0}) == 7 * a * base + 3 * a);       // root from the out formula
            CHECK(f({h, i, 1, 3, 0}) == 7 * a * base);               // in-leaf
            CHECK(f({h, i, 0, 3, 5}) == 7 * a * base + 6 * a);       // out-leaf
        }
    // integer separation: 7a x + 6a >= 7a y iff x >= y
    for (Value x = -5; x <= 5; ++x)
        for (Value y = -5; y <= 5; ++y)
            CHECK((7 * a * x + 6 * a >= 7 * a * y) == (x >= y));
}

TEST_CASE("exactly one valid root per base vertex") {
    auto k4 = complete_graph(4);
    SimLSInstance sim = seeded_sim(k4, 2, 2);
    auto g = build_tree_graph(k4, 2);
    MemberFn valid = lift_valid_set(g, sim);
    for (int h = 0; h < 4; ++h) {
        int count = 0;
        for (int i = 0; i < 2; ++i)
            if (valid({h, i, 0, 0, 0}))
                ++count;
        CHECK(count == 1);
        CHECK(valid({h, sim.bob_index[h], 0, 0, 0}));
    }
}

TEST_CASE("valid out-leaf cross edges land on valid in-leaves of the right gadgets") {
    auto k4 = complete_graph(4);
    SimLSInstance sim = seeded_sim(k4, 2, 3);
    auto g = build_tree_graph(k4, 2);
    MemberFn valid = lift_valid_set(g, sim);
    for (int h = 0; h < 4; ++h) {
        VertexCode leaf = lifted_solution_leaf(*g, sim, {h});
        CHECK(valid(leaf));
        CHECK(g->is_out_leaf(leaf));
        int cross = 0;
        for (const VertexCode& u : g->neighbors(leaf)) {
            if (u[0] == h)
                continue; // tree parent
            ++cross;
            CHECK(u[2] == 1);
            CHECK(u[1] == sim.bob_index[u[0]]); // correct gadget of the neighbor
            CHECK(valid(u));
        }
        CHECK(cross == 3);
    }
}

TEST_CASE("valid local maxima are the designated out-leaves of composed local maxima") {
    auto k4 = complete_graph(4);
    for (int seed = 0; seed < 30; ++seed) {
        SimLSInstance sim = seeded_sim(k4, 2, 100 + seed);
        VetoLSInstance veto = lift_to_vetols(sim);
        auto g = std::dynamic_pointer_cast<const TreeGraph>(veto.graph);
        REQUIRE(g);

        std::set<VertexCode> expect;
        for (const VertexCode& hv : local_maxima(sim.composed()))
            expect.insert(lifted_solution_leaf(*g, sim, hv));
        CHECK(code_set(valid_local_maxima(veto)) == expect);

        // and every valid local maximum is an out-leaf
        for (const VertexCode& v : valid_local_maxima(veto))
            CHECK(g->is_out_leaf(v));
    }
}

TEST_CASE("full chain from query to sum preserves the local-maxima set") {
    for (int n : {4, 6, 8}) {
        for (int seed = 0; seed < 5; ++seed) {
            Rng rng = seeded_rng(9000 + 31 * n + seed);
            auto h = random_regular_graph(n, 3, rng);
            QueryInstance q = random_query(h, 9, rng);
            QueryInstance hq = distinctify(q);
            SimLSInstance sim = simls_build(hq, 2, 77 + seed);
            VetoLSInstance veto = lift_to_vetols(sim);
            auto g = std::dynamic_pointer_cast<const TreeGraph>(veto.graph);

            // anchor: the designated leaf of the first valid local max
            VertexCode anchor = valid_local_maxima(veto).front();
            SumLSInstance sum = veto_to_sum(veto, anchor);

            std::set<VertexCode> got;
            for (const VertexCode& v : local_maxima(sum))
                got.insert(lifted_base_vertex(v));
            CHECK(got == code_set(local_maxima(hq)));
        }
    }
}
