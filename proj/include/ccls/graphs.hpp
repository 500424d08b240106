#pragma once

#include "ccls/code.hpp"
#include "ccls/rng.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccls {

// Neighbor-oracle view of a graph. Structured families are never
// materialized: algorithms only ever ask for the neighbors of codes they
// already hold, so e.g. hypercubes of dimension 127 stay usable for local
// checks. Enumeration (vertex_at / index_of) is only available when the
// family is small enough to index in 64 bits.
class Graph {
  public:
    virtual ~Graph() = default;

    virtual std::string name() const = 0;
    virtual size_t code_len() const = 0;
    virtual bool contains(const VertexCode& v) const = 0;
    virtual std::vector<VertexCode> neighbors(const VertexCode& v) const = 0;
    virtual int degree_bound() const = 0;

    // nullopt when the family does not fit in uint64 (it is then also not
    // enumerable).
    virtual std::optional<uint64_t> vertex_count() const = 0;
    virtual VertexCode vertex_at(uint64_t idx) const;
    virtual uint64_t index_of(const VertexCode& v) const;

    virtual bool adjacent(const VertexCode& u, const VertexCode& v) const;
    virtual std::optional<Value> analytic_distance(const VertexCode& u, const VertexCode& v) const {
        (void)u;
        (void)v;
        return std::nullopt;
    }
    virtual CodeLayout layout() const = 0;

    void require(const VertexCode& v) const {
        if (!contains(v))
            throw std::out_of_range(name() + ": invalid vertex code " + code_str(v));
    }
};

using GraphPtr = std::shared_ptr<const Graph>;

class Hypercube : public Graph {
  public:
    explicit Hypercube(int n);
    int dim() const { return n_; }

    std::string name() const override;
    size_t code_len() const override { return static_cast<size_t>(n_); }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return n_; }
    std::optional<uint64_t> vertex_count() const override;
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    bool adjacent(const VertexCode& u, const VertexCode& v) const override;
    std::optional<Value> analytic_distance(const VertexCode& u, const VertexCode& v) const override;
    CodeLayout layout() const override;

  private:
    int n_;
};

class Grid : public Graph {
  public:
    explicit Grid(std::vector<int> dims);
    const std::vector<int>& dims() const { return dims_; }

    std::string name() const override;
    size_t code_len() const override { return dims_.size(); }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return 2 * static_cast<int>(dims_.size()); }
    std::optional<uint64_t> vertex_count() const override;
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    bool adjacent(const VertexCode& u, const VertexCode& v) const override;
    std::optional<Value> analytic_distance(const VertexCode& u, const VertexCode& v) const override;
    CodeLayout layout() const override;

  private:
    std::vector<int> dims_;
};

// Odd(k): vertices are the (k-1)-subsets of [2k-1], adjacent iff disjoint.
// Codes are single-entry bitmasks, bit j = element j+1. Odd(3) is the
// Petersen graph.
class OddGraph : public Graph {
  public:
    explicit OddGraph(int k);
    int k() const { return k_; }
    int ground_size() const { return 2 * k_ - 1; }

    std::string name() const override;
    size_t code_len() const override { return 1; }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return k_; }
    std::optional<uint64_t> vertex_count() const override;
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    bool adjacent(const VertexCode& u, const VertexCode& v) const override;
    CodeLayout layout() const override;

  private:
    int k_;
};

// The layered DAG behind the pebbling game. Codes (k1,k2,k3,k4) with
// k1 in [0,M^3) the layer and k2..k4 in [0,M). Successors add 1 to the layer
// and +-1 mod M to exactly one of the last three coordinates; layer 0 holds
// the sources and layer M^3-1 the sinks. M >= 3 keeps the graph simple
// (mod-2 arithmetic would collapse +1 and -1 into parallel edges).
class PebblingDag : public Graph {
  public:
    explicit PebblingDag(int M);
    int M() const { return M_; }
    uint64_t layers() const { return static_cast<uint64_t>(M_) * M_ * M_; }
    bool is_source(const VertexCode& v) const { return v[0] == 0; }
    bool is_sink(const VertexCode& v) const { return v[0] == static_cast<int>(layers()) - 1; }

    std::vector<VertexCode> successors(const VertexCode& v) const;
    std::vector<VertexCode> predecessors(const VertexCode& v) const;

    std::string name() const override;
    size_t code_len() const override { return 4; }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return 12; }
    std::optional<uint64_t> vertex_count() const override;
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    CodeLayout layout() const override;

  private:
    int M_;
};

// Replication graph of the pebbling DAG: the undirected DAG plus wrap edges
// joining the top layer back to layer 0 with the same displacement pattern,
// every vertex split into three copies, each copy adjacent to all copies of
// the original neighbors. Codes (k1,k2,k3,k4,i), i in [0,3). 3M^6 vertices,
// regular of degree 36.
class ReplicationGraph : public Graph {
  public:
    explicit ReplicationGraph(int M);
    int M() const { return M_; }
    uint64_t layers() const { return static_cast<uint64_t>(M_) * M_ * M_; }

    // Parity of k1+k2+k3+k4. For even M every edge preserves it.
    static int parity(const VertexCode& v) { return (v[0] + v[1] + v[2] + v[3]) & 1; }

    std::string name() const override;
    size_t code_len() const override { return 5; }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return 36; }
    std::optional<uint64_t> vertex_count() const override;
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    bool adjacent(const VertexCode& u, const VertexCode& v) const override;
    CodeLayout layout() const override;

  private:
    int M_;
};

class ExplicitGraph : public Graph {
  public:
    ExplicitGraph(std::string name, std::vector<std::vector<int>> adj);

    std::string name() const override { return name_; }
    size_t code_len() const override { return 1; }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return max_degree_; }
    std::optional<uint64_t> vertex_count() const override { return adj_.size(); }
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    CodeLayout layout() const override;

    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

  private:
    std::string name_;
    std::vector<std::vector<int>> adj_;
    int max_degree_ = 0;
};

std::shared_ptr<ExplicitGraph> complete_graph(int n);
std::shared_ptr<ExplicitGraph> cycle_graph(int n);
std::shared_ptr<ExplicitGraph> path_graph(int n);

// Seeded random 3-regular simple graph on n vertices (n even, n*3 even) via
// the pairing model with restarts.
std::shared_ptr<ExplicitGraph> random_regular_graph(int n, int degree, Rng& rng);

// Seeded random simple graph with max degree <= cap and as close to m edges
// as degree caps allow.
std::shared_ptr<ExplicitGraph> random_bounded_degree_graph(int n, int m, int degree_cap, Rng& rng);

// Exact shortest-path distance. Uses the analytic form when the family has
// one, otherwise BFS driven by the neighbor oracle. nullopt = unreachable.
// Throws std::length_error when BFS would visit more than `cap` vertices.
std::optional<Value> graph_distance(const Graph& g, const VertexCode& u, const VertexCode& v,
                                    size_t cap = 1u << 22);

// Proper 108-coloring of the replication graph's edges:
// (source-layer parity) x (displacement among 6) x (replication pair in 3x3).
// Defined for even M; edges are classified by their lower-layer endpoint
// along the cyclic layer order, which needs an even number of layers to
// alternate. Throws std::invalid_argument on a non-edge.
int edge_color(const ReplicationGraph& g, const VertexCode& u, const VertexCode& v);

} // namespace ccls
