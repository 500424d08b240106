#include "ccls/embed_replication.hpp"

#include <doctest.h>

#include <set>

using namespace ccls;

TEST_CASE("hypercube embedding guards") {
    CHECK_THROWS_AS(embed_replication_into_hypercube(3), std::invalid_argument);
    CHECK_THROWS_AS(embed_replication_into_hypercube(6), std::invalid_argument);
    CHECK_THROWS_AS(embed_replication_into_hypercube(2), std::invalid_argument);
}

TEST_CASE("hypercube embedding at M=4") {
    ReplicationHypercubeEmbedding E = embed_replication_into_hypercube(4);
    CHECK(E.c == 2);
    CHECK(E.dimension == 127);            // computed block total 6c + 115
    CHECK(E.reference_dimension == 123);  // the 6c + 111 figure quoted alongside

    const Graph& src = *E.emb.source;
    VertexCode v{0, 0, 0, 0, 0};
    VertexCode img = E.emb.phi(v);
    CHECK(img.size() == 127);
    CHECK(img[E.parity_off] == 0);

    // paths have 10 or 12 edges and never touch the parity bit
    Rng rng = seeded_rng(11);
    for (int t = 0; t < 200; ++t) {
        VertexCode a = src.vertex_at(rng.below(*src.vertex_count()));
        auto nbrs = src.neighbors(a);
        VertexCode b = nbrs[rng.below(nbrs.size())];
        auto p = E.emb.path(a, b);
        CHECK((p.size() == 11 || p.size() == 13));
        for (const auto& x : p)
            CHECK(x[E.parity_off] == p.front()[E.parity_off]);
        CHECK(p.front() == E.emb.phi(a));
        CHECK(p.back() == E.emb.phi(b));
        // reversal consistency
        auto q = E.emb.path(b, a);
        std::reverse(q.begin(), q.end());
        CHECK(p == q);
    }

    // sampled verification passes (the exhaustive pass runs in acceptance)
    VerifyOptions opts;
    opts.sample = 3000;
    opts.seed = 5;
    ViedReport rep = verify_vied(E.emb, opts);
    CHECK(rep.ok);
    CHECK(!rep.exhaustive);
}

TEST_CASE("grid embedding at M=4") {
    CHECK_THROWS_AS(embed_replication_into_grid(8), std::invalid_argument); // sqrt not integral
    ReplicationGridEmbedding E = embed_replication_into_grid(4);
    CHECK(E.dims[0] == 8);
    CHECK(E.dims[1] == 8);
    for (int a = 2; a < 8; ++a)
        CHECK(E.dims[a] == 2);
    CHECK(E.dimension == 123);
    CHECK(E.reference_dimension == 119);

    Rng rng = seeded_rng(13);
    const Graph& src = *E.emb.source;
    for (int t = 0; t < 200; ++t) {
        VertexCode a = src.vertex_at(rng.below(*src.vertex_count()));
        auto nbrs = src.neighbors(a);
        VertexCode b = nbrs[rng.below(nbrs.size())];
        auto p = E.emb.path(a, b);
        CHECK((p.size() == 11 || p.size() == 13));
        for (const auto& x : p)
            CHECK(x[E.parity_axis] == p.front()[E.parity_axis]);
    }

    VerifyOptions opts;
    opts.sample = 3000;
    opts.seed = 6;
    CHECK(verify_vied(E.emb, opts).ok);
}

TEST_CASE("interior path vertices decode their predecessor uniquely") {
    // The disjointness argument: an interior vertex determines (via its edge
    // color, counter state and parity bit) the single step that led to it.
    // Rebuilt here independently and checked against the actual paths.
    ReplicationHypercubeEmbedding E = embed_replication_into_hypercube(4);
    const int c = E.c;
    auto gray_rank_in = [&](const VertexCode& x, int off, int bits) {
        uint64_t w = 0;
        for (int b = 0; b < bits; ++b)
            w |= static_cast<uint64_t>(x[off + b]) << b;
        return gray_rank(w);
    };
    auto decode_prev = [&](const VertexCode& x) -> VertexCode {
        int color = -1;
        for (int b = 0; b < 108; ++b)
            if (x[E.edge_off + b])
                color = b;
        REQUIRE(color >= 0);
        int pc = color / 54;
        int disp = color % 54 / 9;
        int rep_i = color % 9 / 3;
        int rep_j = color % 9 % 3;
        int axis = disp / 2 + 1;
        int sign = disp % 2 == 0 ? 1 : -1;
        int cnt = x[E.cnt_off] | (x[E.cnt_off + 1] << 1) | (x[E.cnt_off + 2] << 2);
        uint64_t layer = gray_rank_in(x, E.k_off[0], 3 * c);
        int layer_parity = static_cast<int>(layer & 1);
        Value coord_sum = static_cast<Value>(layer);
        for (int a = 1; a <= 3; ++a)
            coord_sum += static_cast<Value>(gray_rank_in(x, E.k_off[a], c));
        int sum_parity = static_cast<int>(coord_sum & 1);
        int parity_bit = x[E.parity_off];
        const int kRep[3] = {1, 2, 4};
        int rep_word = x[E.rep_off] | (x[E.rep_off + 1] << 1) | (x[E.rep_off + 2] << 2);

        VertexCode prev = x;
        auto flip = [&prev](int pos) { prev[pos] ^= 1; };
        switch (cnt) {
        case 0:
            if (layer_parity == pc)
                flip(E.edge_off + color); // first step: drop the edge bit
            else
                flip(E.cnt_off + 2); // end of the counter return
            break;
        case 1: // 001
            if (sum_parity != parity_bit) {
                // layer already advanced: undo the layer step
                uint64_t prev_layer = (layer + (1ull << (3 * c)) - 1) & ((1ull << (3 * c)) - 1);
                flip(E.k_off[0] + gray_step_bit(prev_layer, 3 * c));
            } else {
                flip(E.cnt_off + 0); // counter just set
            }
            break;
        case 3: // 011: either counter->2 just set, or coordinate stepped
            if (sum_parity != parity_bit)
                flip(E.cnt_off + 1);
            else {
                uint64_t cur = gray_rank_in(x, E.k_off[axis], c);
                uint64_t prev_coord = (cur - sign + (1ull << c)) & ((1ull << c) - 1);
                int bit = sign > 0 ? gray_step_bit(prev_coord, c) : gray_step_bit(cur, c);
                flip(E.k_off[axis] + bit);
            }
            break;
        case 7: { // 111: counter->3, or mid replication flips
            if (rep_word == kRep[rep_i] && rep_i != rep_j) {
                flip(E.cnt_off + 2);
            } else if (rep_word == kRep[rep_j]) {
                if (rep_i == rep_j)
                    flip(E.cnt_off + 2);
                else
                    flip(E.rep_off + std::max(rep_i, rep_j)); // undo second flip
            } else {
                flip(E.rep_off + std::min(rep_i, rep_j)); // undo first flip
            }
            break;
        }
        case 6: // 110: first return step
            flip(E.cnt_off + 0);
            break;
        case 4: // 100: second return step
            flip(E.cnt_off + 1);
            break;
        default:
            FAIL("unexpected counter state");
        }
        return prev;
    };

    // check on a large seeded sample of edges (the full pass is the same
    // code over every edge; sampling keeps the unit suite fast)
    const Graph& src = *E.emb.source;
    Rng rng = seeded_rng(21);
    for (int t = 0; t < 400; ++t) {
        VertexCode a = src.vertex_at(rng.below(*src.vertex_count()));
        auto nbrs = src.neighbors(a);
        VertexCode b = nbrs[rng.below(nbrs.size())];
        auto p = E.emb.path(a, b);
        for (size_t k = 1; k + 1 < p.size(); ++k)
            CHECK(decode_prev(p[k]) == p[k - 1]);
    }
}

TEST_CASE("tripled embedding: distances and the radius-2 ball bound") {
    SparseReplicationEmbedding sparse(4);
    CHECK(sparse.dimension() == 381);

    // at an embedded vertex: itself plus the first two path vertices of
    // each of the 36 incident edges
    Rng rng = seeded_rng(77);
    for (int t = 0; t < 5; ++t) {
        uint64_t idx = rng.below(sparse.source_count());
        CHECK(sparse.ball_intersection(sparse.tripled_phi(idx)) == 73);
    }

    // vertices of independent edge paths stay >= 3 apart
    for (int t = 0; t < 3000; ++t)
        CHECK(sparse.sampled_pair_distance(rng) >= 3);

    // a point far from the image sees nothing
    VertexCode far = sparse.sample_path_vertex(rng, 0);
    for (int t = 0; t < 4; ++t) { // spoil four full triples
        int triple = static_cast<int>(rng.below(127));
        far[3 * triple] ^= 1;
        far[3 * triple + 1] ^= 1;
    }
    CHECK(sparse.ball_intersection(far) == 0);

    // near-image samples respect the bound
    for (int t = 0; t < 300; ++t) {
        VertexCode w = sparse.sample_path_vertex(rng, static_cast<int>(rng.below(3)));
        CHECK(sparse.ball_intersection(w) <= 73);
    }
}
