#pragma once

#include "ccls/graphs.hpp"
#include "ccls/search.hpp"

#include <array>
#include <memory>

namespace ccls {

// Index-gadget-distributed boolean assignment on the pebbling DAG. Alice
// holds bits b(v, slot) for slots 0..2, Bob holds the correct slot I(v); the
// effective assignment is b(v, I(v)). The promise: sources decode to 1,
// sinks to 0. Sought: a false vertex whose predecessors are all true.
struct PebbInstance {
    std::shared_ptr<const PebblingDag> dag;
    std::vector<std::array<uint8_t, 3>> bits; // indexed by dag->index_of
    std::vector<uint8_t> slot;                // I(v) in {0,1,2}

    int M() const { return dag->M(); }
    bool decoded(const VertexCode& v) const {
        uint64_t i = dag->index_of(v);
        return bits[i][slot[i]] != 0;
    }
};

// Nullopt when the promise holds, otherwise a violating source or sink.
std::optional<VertexCode> pebb_promise_violation(const PebbInstance& inst);

// True iff v decodes to 0 and every predecessor decodes to 1.
bool pebb_check(const PebbInstance& inst, const VertexCode& v);

std::vector<VertexCode> pebb_solve_bruteforce(const PebbInstance& inst);

// Seeded promise-respecting instance.
PebbInstance random_pebb(int M, Rng& rng);

// The reduction onto the replication graph: Alice's potential is a reverse
// topological numbering plus a dominating bonus on false copies, Bob keeps
// only the correctly indexed copy of each vertex valid. Valid local maxima
// then correspond one-to-one to pebbling solutions via v -> (v, I(v)).
// Throws std::invalid_argument (naming the vertex) if the promise fails.
VetoLSInstance pebb_to_vetols(const PebbInstance& inst);

// The numbering used by the reduction: strictly decreasing along every
// directed DAG edge lifted into the replication graph (sinks lowest), here
// the reverse lexicographic rank of (k1,k2,k3,k4,i). Range [1, 3M^6].
Value pebb_topological_number(const ReplicationGraph& g, const VertexCode& v);

} // namespace ccls
