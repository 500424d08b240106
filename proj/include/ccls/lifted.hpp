#pragma once

#include "ccls/search.hpp"

namespace ccls {

// Degree-4 replacement of a 3-regular graph H for gadget size M = 2^a:
// every H-vertex becomes M double binary trees of depth 3a sharing a root.
// Out-tree leaves are indexed by a triple (j1,j2,j3) of gadget indices, one
// per H-neighbor in ascending id order, and carry one cross edge into the
// in-tree of each neighbor's addressed gadget. Cross edges land on in-tree
// leaves round-robin, exactly three per leaf.
//
// Codes are (h, i, side, depth, s): h the H-vertex, i the gadget index,
// side 0 = out-tree (the shared root is (h,i,0,0,0)), side 1 = in-tree,
// s the depth-bit path from the root, first step most significant.
class TreeGraph : public Graph {
  public:
    TreeGraph(std::shared_ptr<const ExplicitGraph> base, int gadget_size);

    const ExplicitGraph& base() const { return *base_; }
    std::shared_ptr<const ExplicitGraph> base_ptr() const { return base_; }
    int gadget_size() const { return M_; }
    int depth_bits() const { return 3 * a_; } // leaf depth
    int a() const { return a_; }

    bool is_out_leaf(const VertexCode& v) const { return v[2] == 0 && v[3] == depth_bits(); }

    std::string name() const override;
    size_t code_len() const override { return 5; }
    bool contains(const VertexCode& v) const override;
    std::vector<VertexCode> neighbors(const VertexCode& v) const override;
    int degree_bound() const override { return 4; }
    std::optional<uint64_t> vertex_count() const override;
    VertexCode vertex_at(uint64_t idx) const override;
    uint64_t index_of(const VertexCode& v) const override;
    CodeLayout layout() const override;

  private:
    std::shared_ptr<const ExplicitGraph> base_;
    int M_, a_;
    uint64_t per_gadget_; // 2^{3a+2} - 3 vertices in one double tree

    friend struct TreeWiring;
};

std::shared_ptr<const TreeGraph> build_tree_graph(std::shared_ptr<const ExplicitGraph> base,
                                                  int gadget_size);

// Alice's lifted potential: 7a*f(v,i) at the in-leaves, +1 per step through
// the shared root, 7a*f(v,i)+6a at the out-leaves. Integer separation makes
// 7a*x+6a >= 7a*y equivalent to x >= y.
ValueFn lift_potential(std::shared_ptr<const TreeGraph> g, const SimLSInstance& sim);

// Bob's lifted valid set: the correctly indexed gadget's tree, and in the
// out-tree additionally the prefix of the neighbors' correct indices.
MemberFn lift_valid_set(std::shared_ptr<const TreeGraph> g, const SimLSInstance& sim);

// The full Step-1 lift. Valid local maxima are exactly the designated
// out-leaves of the local maxima of the composed function on H.
VetoLSInstance lift_to_vetols(const SimLSInstance& sim);

// The out-leaf encoding all three correct neighbor indices of H-vertex hv.
VertexCode lifted_solution_leaf(const TreeGraph& g, const SimLSInstance& sim, const VertexCode& hv);

// H-vertex owning any tree-graph vertex.
VertexCode lifted_base_vertex(const VertexCode& tree_vertex);

} // namespace ccls
