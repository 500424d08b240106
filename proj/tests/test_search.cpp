#include "ccls/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace ccls;

namespace {

std::set<VertexCode> code_set(const std::vector<VertexCode>& v) {
    return {v.begin(), v.end()};
}

SumLSInstance table_sumls(GraphPtr g, std::vector<Value> fa, std::vector<Value> fb, Value w) {
    auto a = std::make_shared<std::vector<Value>>(std::move(fa));
    auto b = std::make_shared<std::vector<Value>>(std::move(fb));
    SumLSInstance out;
    out.graph = g;
    out.f_a = [g, a](const VertexCode& v) { return (*a)[g->index_of(v)]; };
    out.f_b = [g, b](const VertexCode& v) { return (*b)[g->index_of(v)]; };
    out.value_bound = w;
    return out;
}

} // namespace

TEST_CASE("local maxima on a path use the weak comparator") {
    auto p3 = path_graph(3);
    auto inst = table_sumls(p3, {1, 2, 1}, {0, 1, 1}, 3); // sums 1,3,2
    CHECK(code_set(local_maxima(inst)) == code_set({{1}}));

    // constant function: every vertex is a weak local maximum
    auto flat = table_sumls(p3, {2, 2, 2}, {1, 1, 1}, 3);
    CHECK(local_maxima(flat).size() == 3);
}

TEST_CASE("valid local maxima on the 4-cycle") {
    auto c4 = cycle_graph(4);
    auto f = std::make_shared<std::vector<Value>>(std::vector<Value>{4, 1, 3, 2});
    VetoLSInstance inst;
    inst.graph = c4;
    inst.potential = [c4, f](const VertexCode& v) { return (*f)[c4->index_of(v)]; };
    inst.valid = [](const VertexCode& v) { return v[0] == 1 || v[0] == 2; };
    inst.value_bound = 4;
    CHECK(code_set(valid_local_maxima(inst)) == code_set({{2}}));
}

TEST_CASE("veto_to_sum reproduces the valid local maxima") {
    auto p3 = path_graph(3);
    auto f = std::make_shared<std::vector<Value>>(std::vector<Value>{1, 2, 3});
    VetoLSInstance veto;
    veto.graph = p3;
    veto.potential = [p3, f](const VertexCode& v) { return (*f)[p3->index_of(v)]; };
    veto.valid = [](const VertexCode& v) { return v[0] <= 1; };
    veto.value_bound = 3;

    SumLSInstance sum = veto_to_sum(veto, {0});
    CHECK(sum.f_b(VertexCode{0}) == 0);
    CHECK(sum.f_b(VertexCode{1}) == 0);
    CHECK(sum.f_b(VertexCode{2}) == -8); // -d(c,a)*(W+1)
    CHECK(code_set(local_maxima(sum)) == code_set({{1}}));
    CHECK(code_set(local_maxima(sum)) == code_set(valid_local_maxima(veto)));

    CHECK_THROWS_AS(veto_to_sum(veto, {2}), std::invalid_argument); // vstar not valid

    // S = V makes f_b vanish and the problems coincide
    VetoLSInstance all = veto;
    all.valid = [](const VertexCode&) { return true; };
    SumLSInstance sum_all = veto_to_sum(all, {0});
    for (int v = 0; v < 3; ++v)
        CHECK(sum_all.f_b(VertexCode{v}) == 0);
}

TEST_CASE("veto_to_sum matches brute force on seeded grid and hypercube instances") {
    for (int seed = 0; seed < 30; ++seed) {
        Rng rng = seeded_rng(1000 + seed);
        GraphPtr g;
        if (seed % 2 == 0)
            g = std::make_shared<Grid>(std::vector<int>{4, 4});
        else
            g = std::make_shared<Hypercube>(6);
        VetoLSInstance veto = random_vetols(g, 12, rng);
        // pick the first valid vertex as anchor
        VertexCode vstar;
        for (uint64_t i = 0; i < *g->vertex_count(); ++i) {
            VertexCode v = g->vertex_at(i);
            if (veto.valid(v)) {
                vstar = v;
                break;
            }
        }
        SumLSInstance sum = veto_to_sum(veto, vstar);
        CHECK(code_set(local_maxima(sum)) == code_set(valid_local_maxima(veto)));
        CHECK(!valid_local_maxima(veto).empty()); // totality
    }
}

TEST_CASE("invalid vertices are never local maxima of the reduced sum") {
    Rng rng = seeded_rng(99);
    auto g = std::make_shared<Grid>(std::vector<int>{4, 4});
    VetoLSInstance veto = random_vetols(g, 5, rng);
    VertexCode vstar;
    for (uint64_t i = 0; i < 16; ++i)
        if (veto.valid(g->vertex_at(i))) {
            vstar = g->vertex_at(i);
            break;
        }
    SumLSInstance sum = veto_to_sum(veto, vstar);
    for (const VertexCode& v : local_maxima(sum))
        CHECK(veto.valid(v));
}

TEST_CASE("distinctify separates values and keeps local maxima") {
    auto p4 = path_graph(4);
    QueryInstance flat(p4, [](const VertexCode&) { return 5; });
    QueryInstance d = distinctify(flat);
    // h' = 2N*h + rank = 40 + rank, ranks 1..4
    for (int v = 0; v < 4; ++v)
        CHECK(d.raw()(VertexCode{v}) == 41 + v);

    // unique global max survives
    QueryInstance peak(p4, [](const VertexCode& v) { return v[0] == 2 ? 9 : 1; });
    auto lm = local_maxima(distinctify(peak));
    CHECK(std::count(lm.begin(), lm.end(), VertexCode{2}) == 1);

    // property: LocalMax(h') subset of LocalMax(h) on random cubic graphs
    for (int seed = 0; seed < 10; ++seed) {
        Rng rng = seeded_rng(500 + seed);
        auto h = random_regular_graph(50, 3, rng);
        QueryInstance q = random_query(h, 9, rng);
        auto big = code_set(local_maxima(q));
        for (const VertexCode& v : local_maxima(distinctify(q)))
            CHECK(big.count(v) == 1);
    }
}

TEST_CASE("simls composition equals the wrapped function") {
    Rng rng = seeded_rng(42);
    auto h = std::dynamic_pointer_cast<const ExplicitGraph>(complete_graph(4));
    QueryInstance q = distinctify(random_query(h, 7, rng));

    SimLSInstance one = simls_build(q, 1, 3);
    for (int v = 0; v < 4; ++v)
        CHECK(one.composed_value(VertexCode{v}) == q.raw()(VertexCode{v})); // M=1 is h exactly

    SimLSInstance sim = simls_build(q, 4, 9);
    for (int v = 0; v < 4; ++v)
        CHECK(sim.composed_value(VertexCode{v}) == q.raw()(VertexCode{v}));
    CHECK(code_set(local_maxima(sim.composed())) == code_set(local_maxima(q)));

    // decoys are never consulted through the composed oracle
    auto log = std::make_shared<std::vector<std::pair<uint64_t, int>>>();
    QueryInstance comp = sim.composed(log);
    for (uint64_t i = 0; i < 4; ++i)
        for (const VertexCode& w : h->neighbors(h->vertex_at(i)))
            comp.value(w);
    for (auto [idx, slot] : *log)
        CHECK(slot == sim.bob_index[idx]);
}

TEST_CASE("query counter counts one increment per evaluation") {
    auto p3 = path_graph(3);
    QueryInstance q(p3, [](const VertexCode& v) { return v[0]; });
    CHECK(q.query_count() == 0);
    q.value({0});
    q.value({0});
    q.value({2});
    CHECK(q.query_count() == 3);
}

TEST_CASE("brute force refuses oversized graphs") {
    auto big = std::make_shared<Hypercube>(40);
    SumLSInstance inst;
    inst.graph = big;
    inst.f_a = [](const VertexCode&) { return 1; };
    inst.f_b = [](const VertexCode&) { return 1; };
    inst.value_bound = 1;
    CHECK_THROWS_AS(local_maxima(inst), std::length_error);
}

TEST_CASE("totality of random instances") {
    Rng rng = seeded_rng(17);
    for (int t = 0; t < 20; ++t) {
        auto g = std::make_shared<Grid>(std::vector<int>{3, 3});
        SumLSInstance s = random_sumls(g, 6, rng);
        CHECK(!local_maxima(s).empty());
        VetoLSInstance v = random_vetols(g, 6, rng);
        CHECK(!valid_local_maxima(v).empty());
    }
}
