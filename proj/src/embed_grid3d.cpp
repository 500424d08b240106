#include "ccls/embed_grid3d.hpp"

#include <map>
#include <stdexcept>

namespace ccls {

namespace {

// Everything below works in baseline coordinates x in [3, 4N+2],
// y in [-1, 2N], z in {0,1}; the grid code shifts to zero-based axes.
struct Pt {
    int x, y, z;
};

// From phi(v) out to the terminal of slot r, inclusive. The four slots fan
// out to the four terminal columns 4i+r at height y=1 without sharing any
// point besides phi(v) itself.
std::vector<Pt> slot_leg(int x0, int r) {
    switch (r) {
    case -1:
        return {{x0, 0, 0}, {x0 - 1, 0, 0}, {x0 - 1, 1, 0}};
    case 0:
        return {{x0, 0, 0}, {x0, 1, 0}};
    case 1:
        return {{x0, 0, 0}, {x0 + 1, 0, 0}, {x0 + 1, 1, 0}};
    case 2:
        return {{x0, 0, 0}, {x0, -1, 0}, {x0 + 1, -1, 0}, {x0 + 2, -1, 0}, {x0 + 2, 0, 0}, {x0 + 2, 1, 0}};
    default:
        throw std::logic_error("slot_leg: bad slot");
    }
}

struct EdgePlan {
    int row;         // dedicated horizontal row, 1-based edge index
    int slot_lo, slot_hi;
};

} // namespace

VIEDEmbedding embed_degree4_into_grid3d(std::shared_ptr<const ExplicitGraph> g) {
    const int n = static_cast<int>(*g->vertex_count());
    if (n < 1)
        throw std::invalid_argument("embed_degree4_into_grid3d: empty graph");
    if (g->degree_bound() > 4)
        throw std::invalid_argument("embed_degree4_into_grid3d: graph has degree > 4");

    // Edges in increasing (lo, hi) order; slots first-come first-served.
    auto plans = std::make_shared<std::map<std::pair<int, int>, EdgePlan>>();
    std::vector<std::array<bool, 4>> used(n, {false, false, false, false});
    auto take_slot = [&used](int v) {
        for (int s = 0; s < 4; ++s)
            if (!used[v][s]) {
                used[v][s] = true;
                return s - 1; // slots are -1,0,1,2
            }
        throw std::logic_error("embed_degree4_into_grid3d: more than 4 edges at a vertex");
    };
    int row = 0;
    for (int u = 0; u < n; ++u)
        for (int v : g->adjacency()[u])
            if (v > u)
                (*plans)[{u, v}] = EdgePlan{++row, take_slot(u), take_slot(v)};

    auto target = std::make_shared<Grid>(std::vector<int>{4 * n, 2 * n + 2, 2});

    auto to_code = [](const Pt& p) -> VertexCode { return {p.x - 3, p.y + 1, p.z}; };

    VIEDEmbedding emb;
    emb.name = "grid3d:" + g->name();
    emb.source = g;
    emb.target = target;
    emb.phi = [to_code](const VertexCode& v) { return to_code({4 * (v[0] + 1), 0, 0}); };
    emb.path = [plans, to_code](const VertexCode& cu, const VertexCode& cv) -> std::vector<VertexCode> {
        int u = cu[0], v = cv[0];
        bool flipped = u > v;
        auto it = plans->find({std::min(u, v), std::max(u, v)});
        if (it == plans->end())
            throw std::invalid_argument("embed_degree4_into_grid3d: not an edge");
        const EdgePlan& plan = it->second;
        int lo = std::min(u, v), hi = std::max(u, v);
        int col_lo = 4 * (lo + 1) + plan.slot_lo;
        int col_hi = 4 * (hi + 1) + plan.slot_hi;

        std::vector<Pt> pts = slot_leg(4 * (lo + 1), plan.slot_lo);
        for (int y = 2; y <= plan.row; ++y)
            pts.push_back({col_lo, y, 0});
        pts.push_back({col_lo, plan.row, 1});
        int step = col_hi > col_lo ? 1 : -1;
        for (int x = col_lo + step; x != col_hi + step; x += step)
            pts.push_back({x, plan.row, 1});
        pts.push_back({col_hi, plan.row, 0});
        for (int y = plan.row - 1; y >= 1; --y)
            pts.push_back({col_hi, y, 0});
        std::vector<Pt> far = slot_leg(4 * (hi + 1), plan.slot_hi);
        for (size_t k = far.size() - 1; k-- > 0;)
            pts.push_back(far[k]);

        std::vector<VertexCode> out;
        out.reserve(pts.size());
        for (const Pt& p : pts)
            out.push_back(to_code(p));
        if (flipped)
            std::reverse(out.begin(), out.end());
        return out;
    };
    return emb;
}

} // namespace ccls
