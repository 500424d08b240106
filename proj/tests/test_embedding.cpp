#include "ccls/embed_grid3d.hpp"
#include "ccls/embed_odd.hpp"
#include "ccls/embedding.hpp"

#include <doctest.h>

#include <map>
#include <set>

using namespace ccls;

namespace {

std::set<VertexCode> code_set(const std::vector<VertexCode>& v) {
    return {v.begin(), v.end()};
}

// Hand-built embedding of the 4-cycle into the 6x6 grid: corners of a
// square, edges along its sides.
VIEDEmbedding square_in_grid() {
    VIEDEmbedding emb;
    emb.name = "square";
    emb.source = cycle_graph(4);
    emb.target = std::make_shared<Grid>(std::vector<int>{6, 6});
    emb.phi = [](const VertexCode& v) -> VertexCode {
        switch (v[0]) {
        case 0: return {0, 0};
        case 1: return {0, 4};
        case 2: return {4, 4};
        default: return {4, 0};
        }
    };
    emb.path = [](const VertexCode& cu, const VertexCode& cv) -> std::vector<VertexCode> {
        auto walk = [](VertexCode from, VertexCode to) {
            std::vector<VertexCode> p{from};
            while (p.back() != to) {
                VertexCode c = p.back();
                for (int ax : {0, 1})
                    if (c[ax] != to[ax]) {
                        c[ax] += to[ax] > c[ax] ? 1 : -1;
                        break;
                    }
                p.push_back(c);
            }
            return p;
        };
        std::map<std::pair<int, int>, std::pair<VertexCode, VertexCode>> corners = {
            {{0, 1}, {{0, 0}, {0, 4}}},
            {{1, 2}, {{0, 4}, {4, 4}}},
            {{2, 3}, {{4, 4}, {4, 0}}},
            {{0, 3}, {{0, 0}, {4, 0}}},
        };
        auto key = std::minmax(cu[0], cv[0]);
        auto [a, b] = corners.at({key.first, key.second});
        auto p = walk(a, b);
        if (cu[0] > cv[0])
            std::reverse(p.begin(), p.end());
        return p;
    };
    return emb;
}

VIEDEmbedding single_edge_in_path() {
    VIEDEmbedding emb;
    emb.name = "edge";
    emb.source = path_graph(2);
    emb.target = path_graph(3);
    emb.phi = [](const VertexCode& v) -> VertexCode { return {v[0] * 2}; };
    emb.path = [](const VertexCode& u, const VertexCode&) -> std::vector<VertexCode> {
        if (u[0] == 0)
            return {{0}, {1}, {2}};
        return {{2}, {1}, {0}};
    };
    return emb;
}

} // namespace

TEST_CASE("verifier accepts a single edge as a 3-vertex path") {
    ViedReport rep = verify_vied(single_edge_in_path());
    CHECK(rep.ok);
    CHECK(rep.edges == 1);
}

TEST_CASE("verifier accepts the hand-built square") {
    ViedReport rep = verify_vied(square_in_grid());
    CHECK(rep.ok);
    CHECK(rep.vertices == 4);
    CHECK(rep.edges == 4);
}

TEST_CASE("each defining property is checked separately") {
    SUBCASE("non-injective phi") {
        VIEDEmbedding emb = square_in_grid();
        emb.phi = [](const VertexCode&) -> VertexCode { return {0, 0}; };
        ViedReport rep = verify_vied(emb);
        REQUIRE(!rep.ok);
        CHECK(rep.violation->kind == "phi-not-injective");
    }
    SUBCASE("path with wrong endpoints") {
        VIEDEmbedding emb = single_edge_in_path();
        emb.path = [](const VertexCode&, const VertexCode&) -> std::vector<VertexCode> {
            return {{0}, {1}};
        };
        ViedReport rep = verify_vied(emb);
        REQUIRE(!rep.ok);
        CHECK(rep.violation->kind == "path-endpoints");
    }
    SUBCASE("path with a non-adjacent step") {
        VIEDEmbedding emb = single_edge_in_path();
        emb.path = [](const VertexCode&, const VertexCode&) -> std::vector<VertexCode> {
            return {{0}, {2}};
        };
        ViedReport rep = verify_vied(emb);
        REQUIRE(!rep.ok);
        CHECK(rep.violation->kind == "path-invalid-step");
    }
    SUBCASE("path repeating a vertex") {
        VIEDEmbedding emb;
        emb.source = path_graph(2);
        emb.target = path_graph(4);
        emb.phi = [](const VertexCode& v) -> VertexCode { return {v[0] * 3}; };
        emb.path = [](const VertexCode& u, const VertexCode&) -> std::vector<VertexCode> {
            std::vector<VertexCode> p{{0}, {1}, {2}, {1}, {2}, {3}};
            if (u[0] == 1)
                std::reverse(p.begin(), p.end());
            return p;
        };
        ViedReport rep = verify_vied(emb);
        REQUIRE(!rep.ok);
        CHECK(rep.violation->kind == "path-not-simple");
    }
    SUBCASE("two paths sharing an interior vertex") {
        // path graph a-b-c embedded with both edge paths running through
        // the grid center
        VIEDEmbedding emb;
        emb.source = path_graph(3);
        emb.target = std::make_shared<Grid>(std::vector<int>{5, 5});
        emb.phi = [](const VertexCode& v) -> VertexCode {
            switch (v[0]) {
            case 0: return {0, 0};
            case 1: return {0, 4};
            default: return {4, 4};
            }
        };
        emb.path = [](const VertexCode& cu, const VertexCode& cv) -> std::vector<VertexCode> {
            std::map<std::pair<int, int>, std::vector<VertexCode>> paths = {
                {{0, 1}, {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {0, 4}}},
                {{1, 2}, {{0, 4}, {1, 4}, {1, 3}, {2, 3}, {3, 3}, {3, 4}, {4, 4}}},
            };
            auto key = std::minmax(cu[0], cv[0]);
            auto p = paths.at({key.first, key.second});
            if (cu[0] > cv[0])
                std::reverse(p.begin(), p.end());
            return p;
        };
        ViedReport rep = verify_vied(emb);
        REQUIRE(!rep.ok);
        CHECK(rep.violation->kind == "interior-overlap");
        CHECK(rep.violation->detail.find("1:3") != std::string::npos);
    }
    SUBCASE("path too close to a mapped vertex") {
        VIEDEmbedding emb = square_in_grid();
        auto base = emb.path;
        // drag the path of edge {1,2} right next to phi(0)
        emb.path = [base](const VertexCode& u, const VertexCode& v) -> std::vector<VertexCode> {
            auto key = std::minmax(u[0], v[0]);
            if (key == std::pair<int, int>{1, 2}) {
                std::vector<VertexCode> p = {{0, 4}, {0, 3}, {0, 2}, {0, 1}, {1, 1}, {1, 2},
                                             {1, 3}, {1, 4}, {2, 4}, {3, 4}, {4, 4}};
                if (u[0] == 2)
                    std::reverse(p.begin(), p.end());
                return p;
            }
            return base(u, v);
        };
        ViedReport rep = verify_vied(emb);
        REQUIRE(!rep.ok);
        CHECK(rep.violation->kind == "isolation");
    }
}

TEST_CASE("transfer of a single edge keeps the higher endpoint") {
    VIEDEmbedding emb = single_edge_in_path();
    ViedReport rep = verify_vied(emb);
    REQUIRE(rep.ok);
    VetoLSInstance veto;
    veto.graph = emb.source;
    veto.potential = [](const VertexCode& v) { return v[0] + 1; }; // f = (1, 2)
    veto.valid = [](const VertexCode&) { return true; };
    veto.value_bound = 2;
    VetoLSInstance lifted = transfer_vetols(emb, veto, rep);
    CHECK(code_set(valid_local_maxima(lifted)) == code_set({{2}})); // phi(v)
    // interior carries the scaled average
    CHECK(lifted.potential(VertexCode{1}) * 2 == lifted.potential(VertexCode{0}) + lifted.potential(VertexCode{2}));
}

TEST_CASE("transfer preserves valid local maxima exactly on the square") {
    VIEDEmbedding emb = square_in_grid();
    ViedReport rep = verify_vied(emb);
    REQUIRE(rep.ok);
    for (int seed = 0; seed < 20; ++seed) {
        Rng rng = seeded_rng(400 + seed);
        // potentials pairwise distinct on adjacent vertices
        std::vector<Value> f = {1, 2, 3, 4};
        for (size_t i = f.size(); i > 1; --i)
            std::swap(f[i - 1], f[rng.below(i)]);
        auto fp = std::make_shared<std::vector<Value>>(f);
        uint64_t valid_mask = 1 + rng.below(15);
        VetoLSInstance veto;
        veto.graph = emb.source;
        veto.potential = [fp](const VertexCode& v) { return (*fp)[v[0]]; };
        veto.valid = [valid_mask](const VertexCode& v) { return (valid_mask >> v[0]) & 1; };
        veto.value_bound = 4;

        VetoLSInstance lifted = transfer_vetols(emb, veto, rep);
        std::set<VertexCode> expect;
        for (const VertexCode& v : valid_local_maxima(veto))
            expect.insert(emb.phi(v));
        CHECK(code_set(valid_local_maxima(lifted)) == expect);

        // vertices off the image are invalid
        CHECK_FALSE(lifted.valid(VertexCode{5, 5}));
        CHECK(lifted.potential(VertexCode{5, 5}) == 0);
    }
}

TEST_CASE("transfer refuses unverified embeddings and tied values") {
    VIEDEmbedding emb = single_edge_in_path();
    ViedReport bogus;
    VetoLSInstance veto;
    veto.graph = emb.source;
    veto.potential = [](const VertexCode&) { return 1; };
    veto.valid = [](const VertexCode&) { return true; };
    veto.value_bound = 1;
    CHECK_THROWS_AS(transfer_vetols(emb, veto, bogus), std::invalid_argument);
    ViedReport rep = verify_vied(emb);
    CHECK_THROWS_AS(transfer_vetols(emb, veto, rep), std::invalid_argument); // equal endpoints
}

TEST_CASE("hypercube-to-odd embedding matches the set algebra at n=1") {
    VIEDEmbedding emb = embed_hypercube_into_odd(1);
    CHECK(emb.phi(VertexCode{0}) == VertexCode{0b01100}); // {3,4}
    CHECK(emb.phi(VertexCode{1}) == VertexCode{0b01001}); // {1,4}
    auto p = emb.path({0}, {1});
    REQUIRE(p.size() == 3);
    CHECK(p[1] == VertexCode{0b10010}); // {2,5}
    CHECK(verify_vied(emb).ok);
}

TEST_CASE("hypercube-to-odd embedding verifies for n <= 3 with full image accounting") {
    for (int n = 1; n <= 3; ++n) {
        VIEDEmbedding emb = embed_hypercube_into_odd(n);
        ViedReport rep = verify_vied(emb);
        CHECK(rep.ok);
        CHECK(rep.vertices == (1ull << n)); // injectivity implies 2^n images

        // shifted-complement vertices stay out of the image
        std::set<VertexCode> image;
        for (uint64_t i = 0; i < (1ull << n); ++i)
            image.insert(emb.phi(emb.source->vertex_at(i)));
        for (uint64_t i = 0; i < (1ull << n); ++i) {
            VertexCode v = emb.source->vertex_at(i);
            for (const VertexCode& u : emb.source->neighbors(v))
                if (emb.source->index_of(u) > i)
                    for (const VertexCode& x : emb.path(v, u))
                        image.insert(x);
        }
        uint32_t full = (1u << (n + 1)) - 1;
        for (uint64_t s = 0; s <= full; ++s) {
            // phi2 of the complemented inner-cube vertex (s, 1)
            uint32_t inner = (~static_cast<uint32_t>(s) & (full >> 1)) | (1u << n);
            uint32_t mask = inner | ((~inner & full) << (n + 1));
            CHECK(image.count({static_cast<int>(mask)}) == 0);
        }
    }
}

TEST_CASE("degree-4 graphs embed into the 3d grid") {
    SUBCASE("two vertices, one edge") {
        std::vector<std::vector<int>> adj = {{1}, {0}};
        auto g = std::make_shared<ExplicitGraph>("pair", adj);
        VIEDEmbedding emb = embed_degree4_into_grid3d(g);
        // baseline x=4i in {3..4N+2} shifts to axis value 4i-3
        CHECK(emb.phi(VertexCode{0}) == VertexCode{1, 1, 0});
        CHECK(emb.phi(VertexCode{1}) == VertexCode{5, 1, 0});
        CHECK(verify_vied(emb).ok);
    }
    SUBCASE("k5") {
        VIEDEmbedding emb = embed_degree4_into_grid3d(complete_graph(5));
        ViedReport rep = verify_vied(emb);
        CHECK(rep.ok);
        CHECK(rep.edges == 10);
    }
    SUBCASE("seeded bounded-degree graphs") {
        for (int seed = 0; seed < 4; ++seed) {
            Rng rng = seeded_rng(5000 + seed);
            auto g = random_bounded_degree_graph(12 + 5 * seed, 20 + 6 * seed, 4, rng);
            CHECK(verify_vied(embed_degree4_into_grid3d(g)).ok);
        }
    }
    SUBCASE("degree cap enforced") {
        CHECK_THROWS_AS(embed_degree4_into_grid3d(complete_graph(6)), std::invalid_argument);
    }
}
