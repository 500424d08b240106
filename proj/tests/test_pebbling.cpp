#include "ccls/pebbling.hpp"

#include <doctest.h>

#include <set>

using namespace ccls;

namespace {

std::set<VertexCode> code_set(const std::vector<VertexCode>& v) {
    return {v.begin(), v.end()};
}

PebbInstance uniform_instance(int M, bool value) {
    PebbInstance inst;
    inst.dag = std::make_shared<PebblingDag>(M);
    uint64_t n = *inst.dag->vertex_count();
    uint8_t bit = value ? 1 : 0;
    inst.bits.assign(n, {bit, bit, bit});
    inst.slot.assign(n, 0);
    return inst;
}

} // namespace

TEST_CASE("all-true-except-sinks solves exactly at the sinks") {
    PebbInstance inst = uniform_instance(3, true);
    int last = static_cast<int>(inst.dag->layers()) - 1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                uint64_t i = inst.dag->index_of({last, a, b, c});
                inst.bits[i] = {0, 0, 0};
            }
    CHECK(!pebb_promise_violation(inst).has_value());
    auto sols = pebb_solve_bruteforce(inst);
    CHECK(sols.size() == 27);
    for (const auto& v : sols)
        CHECK(v[0] == last);
}

TEST_CASE("all-false-except-sources solves exactly at the second layer") {
    PebbInstance inst = uniform_instance(3, false);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                uint64_t i = inst.dag->index_of({0, a, b, c});
                inst.bits[i] = {1, 1, 1};
            }
    CHECK(!pebb_promise_violation(inst).has_value());
    // oracle: scan the definition directly
    std::set<VertexCode> expect;
    for (uint64_t i = 0; i < *inst.dag->vertex_count(); ++i) {
        VertexCode v = inst.dag->vertex_at(i);
        bool sol = !inst.decoded(v);
        for (const VertexCode& u : inst.dag->predecessors(v))
            sol = sol && inst.decoded(u);
        if (sol)
            expect.insert(v);
    }
    CHECK(code_set(pebb_solve_bruteforce(inst)) == expect);
    for (const auto& v : expect)
        CHECK(v[0] == 1);
}

TEST_CASE("random promise-respecting instances are total") {
    for (int seed = 0; seed < 10; ++seed) {
        Rng rng = seeded_rng(seed);
        PebbInstance inst = random_pebb(3, rng);
        CHECK(!pebb_promise_violation(inst).has_value());
        CHECK(!pebb_solve_bruteforce(inst).empty());
    }
}

TEST_CASE("topological numbering decreases along lifted DAG edges") {
    ReplicationGraph g(3);
    PebblingDag d(3);
    Rng rng = seeded_rng(5);
    for (int t = 0; t < 500; ++t) {
        VertexCode v = d.vertex_at(rng.below(*d.vertex_count()));
        for (const VertexCode& u : d.successors(v))
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    VertexCode gv = {v[0], v[1], v[2], v[3], i};
                    VertexCode gu = {u[0], u[1], u[2], u[3], j};
                    CHECK(pebb_topological_number(g, gv) > pebb_topological_number(g, gu));
                }
    }
}

TEST_CASE("reduction rejects promise violations with the witness") {
    PebbInstance inst = uniform_instance(3, true); // sinks decode true: violated
    CHECK(pebb_promise_violation(inst).has_value());
    CHECK((*pebb_promise_violation(inst))[0] == 26);
    CHECK_THROWS_WITH_AS(pebb_to_vetols(inst), doctest::Contains("26:0:0:0"),
                         std::invalid_argument);
}

TEST_CASE("valid set is the graph of the index function") {
    Rng rng = seeded_rng(2);
    PebbInstance inst = random_pebb(3, rng);
    VetoLSInstance veto = pebb_to_vetols(inst);
    uint64_t valid_count = 0;
    for (uint64_t i = 0; i < *veto.graph->vertex_count(); ++i)
        if (veto.valid(veto.graph->vertex_at(i)))
            ++valid_count;
    CHECK(valid_count == *inst.dag->vertex_count()); // |S| = M^6
}

TEST_CASE("pebbling solutions and valid local maxima correspond") {
    for (int seed = 0; seed < 50; ++seed) {
        Rng rng = seeded_rng(7000 + seed);
        PebbInstance inst = random_pebb(3, rng);
        VetoLSInstance veto = pebb_to_vetols(inst);

        std::set<VertexCode> expect;
        for (const VertexCode& v : pebb_solve_bruteforce(inst)) {
            VertexCode lifted = v;
            lifted.push_back(inst.slot[inst.dag->index_of(v)]);
            expect.insert(lifted);
        }
        CHECK(code_set(valid_local_maxima(veto, 3000)) == expect);
    }
}

TEST_CASE("sources are never valid local maxima") {
    for (int seed = 0; seed < 5; ++seed) {
        Rng rng = seeded_rng(31 + seed);
        PebbInstance inst = random_pebb(3, rng);
        VetoLSInstance veto = pebb_to_vetols(inst);
        for (const VertexCode& v : valid_local_maxima(veto, 3000))
            CHECK(v[0] != 0);
    }
}
