#pragma once

#include "ccls/embedding.hpp"

namespace ccls {

// VIED embedding of the replication graph into a hypercube. A vertex code
// is laid out in blocks: Gray-coded index blocks for the four coordinates
// (3c, c, c, c bits), a 3-bit replication block holding one of three
// pairwise-distance-2 words, a parity bit, a 108-bit edge block indexed by
// the proper edge coloring, and a 3-bit counter block. An edge path raises
// its color's edge bit, walks the counter forward while stepping the layer,
// the displaced coordinate and the replication word, then clears the
// counter bits in the same order and drops the edge bit.
//
// The counter and replication blocks are one bit wider than the dimension
// quoted alongside the construction (reference_dimension); three
// replication words cannot sit pairwise at distance >= 2 in two bits, so
// isolation forces the wider block. The verifier is the arbiter.
struct ReplicationHypercubeEmbedding {
    VIEDEmbedding emb;
    int M = 0, c = 0;          // M = 2^c, c >= 2
    int dimension = 0;         // 6c + 115
    int reference_dimension = 0; // 6c + 111
    int k_off[4] = {0, 0, 0, 0};
    int k_bits[4] = {0, 0, 0, 0};
    int rep_off = 0, parity_off = 0, edge_off = 0, cnt_off = 0;
};

ReplicationHypercubeEmbedding embed_replication_into_hypercube(int M);

// Same schedule into a constant-dimension grid: the coordinate blocks use
// Hamiltonian cycles of square grids (M^1.5 x M^1.5 for the layer,
// sqrt(M) x sqrt(M) for the others), the remaining blocks are binary axes.
// Requires sqrt(M) to be an even integer.
struct ReplicationGridEmbedding {
    VIEDEmbedding emb;
    int M = 0;
    std::vector<int> dims;     // axis sizes
    int dimension = 0;         // dims.size() = 123
    int reference_dimension = 119;
    int k_axis[4] = {0, 0, 0, 0}; // first axis of each coordinate block (2 axes each)
    int rep_axis = 0, parity_axis = 0, edge_axis = 0, cnt_axis = 0;
};

ReplicationGridEmbedding embed_replication_into_grid(int M);

// Sparse variant: every coordinate of the hypercube embedding is tripled
// (bit b becomes bits 3b..3b+2, flipped in order), multiplying all Hamming
// distances by 3. Balls of radius 2 around any point then meet the image in
// at most 73 vertices: the maximum sits at an embedded vertex, one plus the
// first two path vertices of each of its 36 edges.
class SparseReplicationEmbedding {
  public:
    explicit SparseReplicationEmbedding(int M);

    const VIEDEmbedding& embedding() const { return emb_; }
    const ReplicationHypercubeEmbedding& base() const { return base_; }
    int dimension() const { return 3 * base_.dimension; }

    // |B_2(w) ∩ Im| for a target (tripled) vertex code.
    uint64_t ball_intersection(const VertexCode& w) const;

    // Uniform-ish seeded samples for stress checks: a vertex of some edge
    // path (tripled), optionally perturbed by `flips` random bit flips, or
    // an embedded vertex by source index.
    VertexCode sample_path_vertex(Rng& rng, int flips = 0) const;
    VertexCode tripled_phi(uint64_t source_index) const;
    uint64_t source_count() const;

    // Tripled Hamming distance between two stored path vertices, for
    // sampled independent-path separation checks.
    Value sampled_pair_distance(Rng& rng) const;

  private:
    struct Index;
    ReplicationHypercubeEmbedding base_;
    VIEDEmbedding emb_;
    std::shared_ptr<const Index> index_;
};

} // namespace ccls
