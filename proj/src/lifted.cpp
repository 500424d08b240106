#include "ccls/lifted.hpp"

#include <bit>
#include <stdexcept>

namespace ccls {

namespace {

int log2_exact(int m) {
    if (m < 2 || (m & (m - 1)) != 0)
        throw std::invalid_argument("TreeGraph: gadget size must be a power of two, >= 2");
    return std::countr_zero(static_cast<unsigned>(m));
}

} // namespace

TreeGraph::TreeGraph(std::shared_ptr<const ExplicitGraph> base, int gadget_size)
    : base_(std::move(base)), M_(gadget_size), a_(log2_exact(gadget_size)) {
    uint64_t n = *base_->vertex_count();
    for (uint64_t v = 0; v < n; ++v)
        if (base_->adjacency()[v].size() != 3)
            throw std::invalid_argument("TreeGraph: base graph must be 3-regular");
    per_gadget_ = (4ull << (3 * a_)) - 3; // two depth-3a trees sharing the root
    if (3 * a_ > 20)
        throw std::invalid_argument("TreeGraph: gadget size too large");
}

std::shared_ptr<const TreeGraph> build_tree_graph(std::shared_ptr<const ExplicitGraph> base,
                                                  int gadget_size) {
    return std::make_shared<TreeGraph>(std::move(base), gadget_size);
}

std::string TreeGraph::name() const {
    return "tree:" + base_->name() + ":" + std::to_string(M_);
}

bool TreeGraph::contains(const VertexCode& v) const {
    if (v.size() != 5)
        return false;
    auto [h, i, side, d, s] = std::tuple{v[0], v[1], v[2], v[3], v[4]};
    if (!base_->contains({h}) || i < 0 || i >= M_)
        return false;
    if (side != 0 && side != 1)
        return false;
    if (d < 0 || d > depth_bits() || s < 0 || s >= (1 << d))
        return false;
    if (side == 1 && d == 0)
        return false; // the shared root is canonically an out-tree code
    return true;
}

std::vector<VertexCode> TreeGraph::neighbors(const VertexCode& v) const {
    require(v);
    int h = v[0], i = v[1], side = v[2], d = v[3], s = v[4];
    const int leaf_d = depth_bits();
    std::vector<VertexCode> out;
    out.reserve(4);

    if (d == 0) { // shared root: two children in each tree
        out.push_back({h, i, 0, 1, 0});
        out.push_back({h, i, 0, 1, 1});
        out.push_back({h, i, 1, 1, 0});
        out.push_back({h, i, 1, 1, 1});
        return out;
    }
    // parent
    out.push_back(d == 1 ? VertexCode{h, i, 0, 0, 0} : VertexCode{h, i, side, d - 1, s >> 1});
    if (d < leaf_d) {
        out.push_back({h, i, side, d + 1, 2 * s});
        out.push_back({h, i, side, d + 1, 2 * s + 1});
        return out;
    }

    // Leaves: cross edges. Out-leaf s = (j1,j2,j3) sends edge k to the
    // in-tree of the k-th neighbor at gadget j_k, landing on leaf
    // i*M^2 + (the two remaining components).
    const auto& nbrs_h = base_->adjacency()[h];
    if (side == 0) {
        int j[3] = {(s >> (2 * a_)) & (M_ - 1), (s >> a_) & (M_ - 1), s & (M_ - 1)};
        for (int k = 0; k < 3; ++k) {
            int f1 = j[k == 0 ? 1 : 0];
            int f2 = j[k == 2 ? 1 : 2];
            int target_leaf = i * M_ * M_ + f1 * M_ + f2;
            out.push_back({nbrs_h[k], j[k], 1, leaf_d, target_leaf});
        }
    } else {
        int src_gadget = s / (M_ * M_);
        int f1 = (s / M_) % M_, f2 = s % M_;
        for (int q = 0; q < 3; ++q) {
            int src_h = nbrs_h[q];
            const auto& back = base_->adjacency()[src_h];
            int k = 0;
            while (back[k] != h)
                ++k;
            int j[3];
            j[k] = i;
            j[k == 0 ? 1 : 0] = f1;
            j[k == 2 ? 1 : 2] = f2;
            int src_s = (j[0] << (2 * a_)) | (j[1] << a_) | j[2];
            out.push_back({src_h, src_gadget, 0, leaf_d, src_s});
        }
    }
    return out;
}

std::optional<uint64_t> TreeGraph::vertex_count() const {
    return *base_->vertex_count() * static_cast<uint64_t>(M_) * per_gadget_;
}

VertexCode TreeGraph::vertex_at(uint64_t idx) const {
    if (idx >= *vertex_count())
        throw std::out_of_range("TreeGraph::vertex_at");
    uint64_t node = idx % per_gadget_;
    idx /= per_gadget_;
    int i = static_cast<int>(idx % M_);
    int h = static_cast<int>(idx / M_);
    uint64_t out_tree = (2ull << (3 * a_)) - 1; // nodes with side 0, root included
    if (node < out_tree) {
        int d = std::bit_width(node + 1) - 1;
        int s = static_cast<int>(node + 1 - (1ull << d));
        return {h, i, 0, d, s};
    }
    node -= out_tree;
    int d = std::bit_width(node + 2) - 1;
    int s = static_cast<int>(node + 2 - (1ull << d));
    return {h, i, 1, d, s};
}

uint64_t TreeGraph::index_of(const VertexCode& v) const {
    require(v);
    uint64_t gadget = static_cast<uint64_t>(v[0]) * M_ + v[1];
    uint64_t node;
    if (v[2] == 0)
        node = (1ull << v[3]) - 1 + v[4];
    else
        node = (2ull << (3 * a_)) - 1 + (1ull << v[3]) - 2 + v[4];
    return gadget * per_gadget_ + node;
}

CodeLayout TreeGraph::layout() const {
    uint64_t n = *base_->vertex_count();
    int hb = std::max<int>(1, std::bit_width(n - 1));
    int db = static_cast<int>(std::bit_width(static_cast<unsigned>(depth_bits())));
    return CodeLayout({hb, std::max(1, a_), 1, db, std::max(1, depth_bits())});
}

ValueFn lift_potential(std::shared_ptr<const TreeGraph> g, const SimLSInstance& sim) {
    if (sim.graph->name() != g->base().name() || sim.gadget_size != g->gadget_size())
        throw std::invalid_argument("lift_potential: tree graph does not match the instance");
    Value a = g->a();
    auto arrays = std::make_shared<std::vector<std::vector<Value>>>(sim.arrays);
    return [g, a, arrays](const VertexCode& v) -> Value {
        g->require(v);
        Value f = (*arrays)[v[0]][v[1]];
        Value depth = v[3];
        return 7 * a * f + 3 * a + (v[2] == 0 ? depth : -depth);
    };
}

MemberFn lift_valid_set(std::shared_ptr<const TreeGraph> g, const SimLSInstance& sim) {
    if (sim.graph->name() != g->base().name() || sim.gadget_size != g->gadget_size())
        throw std::invalid_argument("lift_valid_set: tree graph does not match the instance");
    int a = g->a();
    auto index = std::make_shared<std::vector<int>>(sim.bob_index);
    auto base = g->base_ptr();
    return [g, a, base, index](const VertexCode& v) -> bool {
        g->require(v);
        if ((*index)[v[0]] != v[1])
            return false;
        if (v[2] == 1)
            return true;
        const auto& nbrs = base->adjacency()[v[0]];
        int nbin = ((*index)[nbrs[0]] << (2 * a)) | ((*index)[nbrs[1]] << a) | (*index)[nbrs[2]];
        return v[4] == (nbin >> (3 * a - v[3]));
    };
}

VetoLSInstance lift_to_vetols(const SimLSInstance& sim) {
    auto base = std::dynamic_pointer_cast<const ExplicitGraph>(sim.graph);
    if (!base)
        throw std::invalid_argument("lift_to_vetols: base graph must be explicit");
    auto g = build_tree_graph(base, sim.gadget_size);
    Value a = g->a();
    Value vmax = 0;
    for (const auto& row : sim.arrays)
        for (Value x : row)
            vmax = std::max(vmax, x);
    VetoLSInstance out;
    out.graph = g;
    out.potential = lift_potential(g, sim);
    out.valid = lift_valid_set(g, sim);
    out.value_bound = 7 * a * vmax + 6 * a;
    return out;
}

VertexCode lifted_solution_leaf(const TreeGraph& g, const SimLSInstance& sim, const VertexCode& hv) {
    g.base().require(hv);
    int a = g.a();
    const auto& nbrs = g.base().adjacency()[hv[0]];
    int nbin = (sim.bob_index[nbrs[0]] << (2 * a)) | (sim.bob_index[nbrs[1]] << a) |
               sim.bob_index[nbrs[2]];
    return {hv[0], sim.bob_index[hv[0]], 0, 3 * a, nbin};
}

VertexCode lifted_base_vertex(const VertexCode& tree_vertex) {
    return {tree_vertex[0]};
}

} // namespace ccls
