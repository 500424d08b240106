#pragma once

#include "ccls/graphs.hpp"
#include "ccls/rng.hpp"

#include <atomic>
#include <functional>
#include <memory>

namespace ccls {

// Enumeration guard shared by all brute-force scans. Past the cap only
// oracle-style local checks are offered.
inline constexpr uint64_t kBruteForceCap = 1ull << 20;

using ValueFn = std::function<Value(const VertexCode&)>;
using MemberFn = std::function<bool(const VertexCode&)>;

// One party holds the potential f: V -> [1..W], the other a nonempty valid
// set S. Sought: a valid vertex whose valid neighbors all have weakly lower
// potential.
struct VetoLSInstance {
    GraphPtr graph;
    ValueFn potential;
    MemberFn valid;
    Value value_bound = 0; // W
};

// Split potential f_a + f_b; sought: a weak local maximum of the sum.
struct SumLSInstance {
    GraphPtr graph;
    ValueFn f_a, f_b;
    Value value_bound = 0;                // bound on |values|
    bool distinct_adjacent_sums = false;  // set by generators that guarantee it

    Value sum(const VertexCode& v) const { return f_a(v) + f_b(v); }
};

// Query-model instance: h can only be read through value(), which bumps the
// query counter exactly once per evaluation.
class QueryInstance {
  public:
    QueryInstance(GraphPtr g, ValueFn h)
        : graph_(std::move(g)), h_(std::move(h)),
          count_(std::make_shared<std::atomic<uint64_t>>(0)) {}

    Value value(const VertexCode& v) const {
        count_->fetch_add(1, std::memory_order_relaxed);
        return h_(v);
    }
    uint64_t query_count() const { return count_->load(); }
    void reset_query_count() const { count_->store(0); }

    const GraphPtr& graph() const { return graph_; }
    // Uncounted access, for instance construction and test oracles only.
    const ValueFn& raw() const { return h_; }

  private:
    GraphPtr graph_;
    ValueFn h_;
    std::shared_ptr<std::atomic<uint64_t>> count_;
};

// Index-gadget instance on a degree-3 graph H: Alice holds per-vertex value
// arrays, Bob holds the correct index into each. The composed function
// h(v) = f(v, I(v)) is the search target.
struct SimLSInstance {
    GraphPtr graph;
    int gadget_size = 0;                      // M
    std::vector<std::vector<Value>> arrays;   // arrays[index_of(v)][i]
    std::vector<int> bob_index;               // I(v) in [0, M)

    Value composed_value(const VertexCode& v) const {
        uint64_t idx = graph->index_of(v);
        return arrays[idx][bob_index[idx]];
    }
    // Query oracle over the composed function; when access_log is given,
    // every (vertex index, array slot) the oracle touches is appended.
    QueryInstance composed(std::shared_ptr<std::vector<std::pair<uint64_t, int>>> access_log = nullptr) const;
};

// Weak local-maximum comparator shared by the brute-force oracles and the
// solvers, so the two can never drift apart.
bool is_local_max(const Graph& g, const ValueFn& f, const VertexCode& v);
bool is_valid_local_max(const VetoLSInstance& inst, const VertexCode& v);

// Exact sets by exhaustive scan, in enumeration order. Throws
// std::length_error when the graph exceeds `cap` vertices.
std::vector<VertexCode> local_maxima(const SumLSInstance& inst, uint64_t cap = kBruteForceCap);
std::vector<VertexCode> local_maxima(const QueryInstance& inst, uint64_t cap = kBruteForceCap);
std::vector<VertexCode> valid_local_maxima(const VetoLSInstance& inst, uint64_t cap = kBruteForceCap);

// VetoLS -> SumLS: f_a is the potential unchanged; f_b is 0 on S and
// -d(v, vstar) * (W+1) outside, pulling every invalid vertex toward the
// valid anchor vstar. Local maxima of the sum are exactly the valid local
// maxima of the input.
SumLSInstance veto_to_sum(const VetoLSInstance& inst, const VertexCode& vstar,
                          uint64_t cap = kBruteForceCap);

// h'(v) = 2N*h(v) + rank(v) with ranks 1..N: values become pairwise
// distinct and every local maximum of h' is one of h.
QueryInstance distinctify(const QueryInstance& q);

// Wraps a (distinct-valued) query instance into an index gadget: Bob's index
// is seeded-uniform, the correct slot carries h, decoys are seeded noise.
SimLSInstance simls_build(const QueryInstance& q, int gadget_size, uint64_t seed);

// Seeded instance generators (enumerable graphs only).
SumLSInstance random_sumls(GraphPtr g, Value w, Rng& rng, bool require_distinct_adjacent_sums = false);
VetoLSInstance random_vetols(GraphPtr g, Value w, Rng& rng);
QueryInstance random_query(GraphPtr g, Value w, Rng& rng);

} // namespace ccls
