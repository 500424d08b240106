#include "ccls/embed_replication.hpp"

#include "ccls/hamiltonian.hpp"

#include <bit>
#include <stdexcept>

namespace ccls {

namespace {

// Replication words: pairwise Hamming distance 2, so copies of the same
// base vertex map at least 2 apart. The mid-flip words {0,3,5,6} never
// collide with these.
constexpr int kRepWord[3] = {1, 2, 4};

std::pair<int, int> displacement(const VertexCode& s, const VertexCode& t, int M) {
    for (int a = 1; a <= 3; ++a) {
        int d = ((t[a] - s[a]) % M + M) % M;
        if (d == 1)
            return {a, 1};
        if (d == M - 1)
            return {a, -1};
    }
    throw std::invalid_argument("replication embedding: not an edge");
}

void set_bits(VertexCode& code, int off, int bits, uint64_t word) {
    for (int b = 0; b < bits; ++b)
        code[off + b] = static_cast<int>((word >> b) & 1);
}

} // namespace

ReplicationHypercubeEmbedding embed_replication_into_hypercube(int M) {
    if (M < 4 || (M & (M - 1)) != 0)
        throw std::invalid_argument("embed_replication_into_hypercube: M must be 2^c with c >= 2");
    ReplicationHypercubeEmbedding E;
    E.M = M;
    E.c = std::countr_zero(static_cast<unsigned>(M));
    const int c = E.c;
    E.k_bits[0] = 3 * c;
    E.k_bits[1] = E.k_bits[2] = E.k_bits[3] = c;
    E.k_off[0] = 0;
    E.k_off[1] = 3 * c;
    E.k_off[2] = 4 * c;
    E.k_off[3] = 5 * c;
    E.rep_off = 6 * c;
    E.parity_off = 6 * c + 3;
    E.edge_off = 6 * c + 4;
    E.cnt_off = 6 * c + 112;
    E.dimension = 6 * c + 115;
    E.reference_dimension = 6 * c + 111;

    auto source = std::make_shared<ReplicationGraph>(M);
    auto target = std::make_shared<Hypercube>(E.dimension);
    const int n = E.dimension;
    const int layers = static_cast<int>(source->layers());
    const int k_off0 = E.k_off[0], k_off1 = E.k_off[1], k_off2 = E.k_off[2], k_off3 = E.k_off[3];
    const int rep_off = E.rep_off, parity_off = E.parity_off, edge_off = E.edge_off,
              cnt_off = E.cnt_off;

    auto phi = [=](const VertexCode& v) -> VertexCode {
        source->require(v);
        VertexCode code(n, 0);
        set_bits(code, k_off0, 3 * c, gray(static_cast<uint64_t>(v[0])));
        set_bits(code, k_off1, c, gray(static_cast<uint64_t>(v[1])));
        set_bits(code, k_off2, c, gray(static_cast<uint64_t>(v[2])));
        set_bits(code, k_off3, c, gray(static_cast<uint64_t>(v[3])));
        set_bits(code, rep_off, 3, kRepWord[v[4]]);
        code[parity_off] = ReplicationGraph::parity(v);
        return code;
    };

    E.emb.name = "replication-hypercube:M=" + std::to_string(M);
    E.emb.source = source;
    E.emb.target = target;
    E.emb.phi = phi;
    E.emb.path = [=](const VertexCode& a, const VertexCode& b) -> std::vector<VertexCode> {
        bool up = (a[0] + 1) % layers == b[0];
        const VertexCode& s = up ? a : b;
        const VertexCode& t = up ? b : a;
        int m = edge_color(*source, s, t);
        auto [axis, dir] = displacement(s, t, M);
        int k_off_axis = axis == 1 ? k_off1 : axis == 2 ? k_off2 : k_off3;

        std::vector<VertexCode> p;
        p.reserve(13);
        VertexCode cur = phi(s);
        p.push_back(cur);
        auto flip = [&](int pos) {
            cur[pos] ^= 1;
            p.push_back(cur);
        };
        flip(edge_off + m);
        flip(cnt_off + 0);
        flip(k_off0 + gray_step_bit(static_cast<uint64_t>(s[0]), 3 * c));
        flip(cnt_off + 1);
        flip(k_off_axis + (dir > 0 ? gray_step_bit(static_cast<uint64_t>(s[axis]), c)
                                   : gray_step_bit(static_cast<uint64_t>(t[axis]), c)));
        flip(cnt_off + 2);
        int rep_diff = kRepWord[s[4]] ^ kRepWord[t[4]];
        for (int b2 = 0; b2 < 3; ++b2)
            if ((rep_diff >> b2) & 1)
                flip(rep_off + b2);
        flip(cnt_off + 0);
        flip(cnt_off + 1);
        flip(cnt_off + 2);
        flip(edge_off + m);
        if (!(cur == phi(t)))
            throw std::logic_error("replication-hypercube path does not land on phi(t)");
        if (!up)
            std::reverse(p.begin(), p.end());
        return p;
    };
    return E;
}

ReplicationGridEmbedding embed_replication_into_grid(int M) {
    int root = 0;
    while (root * root < M)
        ++root;
    if (root * root != M || root % 2 != 0)
        throw std::invalid_argument(
            "embed_replication_into_grid: sqrt(M) must be an even integer (M = 4, 16, ...)");
    const int side_big = root * root * root; // M^1.5
    ReplicationGridEmbedding E;
    E.M = M;
    E.k_axis[0] = 0;
    E.k_axis[1] = 2;
    E.k_axis[2] = 4;
    E.k_axis[3] = 6;
    E.rep_axis = 8;
    E.parity_axis = 11;
    E.edge_axis = 12;
    E.cnt_axis = 120;
    E.dims = {side_big, side_big, root, root, root, root, root, root};
    for (int i = 0; i < 3 + 1 + 108 + 3; ++i)
        E.dims.push_back(2);
    E.dimension = static_cast<int>(E.dims.size());

    auto source = std::make_shared<ReplicationGraph>(M);
    auto target = std::make_shared<Grid>(E.dims);
    auto big_cycle = std::make_shared<GridCycle>(grid_ham_cycle(side_big, side_big));
    auto small_cycle = std::make_shared<GridCycle>(grid_ham_cycle(root, root));
    const int layers = static_cast<int>(source->layers());
    const int n_axes = E.dimension;
    const int rep_axis = E.rep_axis, parity_axis = E.parity_axis, edge_axis = E.edge_axis,
              cnt_axis = E.cnt_axis;
    const int k_axis1 = E.k_axis[1], k_axis2 = E.k_axis[2], k_axis3 = E.k_axis[3];

    auto phi = [=](const VertexCode& v) -> VertexCode {
        source->require(v);
        VertexCode code(n_axes, 0);
        auto [r0, c0] = big_cycle->order[v[0]];
        code[0] = r0;
        code[1] = c0;
        for (int a = 1; a <= 3; ++a) {
            auto [r, cc] = small_cycle->order[v[a]];
            code[2 * a] = r;
            code[2 * a + 1] = cc;
        }
        set_bits(code, rep_axis, 3, kRepWord[v[4]]);
        code[parity_axis] = ReplicationGraph::parity(v);
        return code;
    };

    E.emb.name = "replication-grid:M=" + std::to_string(M);
    E.emb.source = source;
    E.emb.target = target;
    E.emb.phi = phi;
    E.emb.path = [=](const VertexCode& a, const VertexCode& b) -> std::vector<VertexCode> {
        bool up = (a[0] + 1) % layers == b[0];
        const VertexCode& s = up ? a : b;
        const VertexCode& t = up ? b : a;
        int m = edge_color(*source, s, t);
        auto [axis, dir] = displacement(s, t, M);
        (void)dir;
        int first_axis = axis == 1 ? k_axis1 : axis == 2 ? k_axis2 : k_axis3;

        std::vector<VertexCode> p;
        p.reserve(13);
        VertexCode cur = phi(s);
        p.push_back(cur);
        auto flip = [&](int pos) {
            cur[pos] ^= 1;
            p.push_back(cur);
        };
        auto cycle_step = [&](const GridCycle& cyc, int base_axis, int from, int to) {
            auto [r1, c1] = cyc.order[from];
            auto [r2, c2] = cyc.order[to];
            if (r1 != r2)
                cur[base_axis] = r2;
            else
                cur[base_axis + 1] = c2;
            p.push_back(cur);
        };
        flip(edge_axis + m);
        flip(cnt_axis + 0);
        cycle_step(*big_cycle, 0, s[0], t[0]);
        flip(cnt_axis + 1);
        cycle_step(*small_cycle, first_axis, s[axis], t[axis]);
        flip(cnt_axis + 2);
        int rep_diff = kRepWord[s[4]] ^ kRepWord[t[4]];
        for (int b2 = 0; b2 < 3; ++b2)
            if ((rep_diff >> b2) & 1)
                flip(rep_axis + b2);
        flip(cnt_axis + 0);
        flip(cnt_axis + 1);
        flip(cnt_axis + 2);
        flip(edge_axis + m);
        if (!(cur == phi(t)))
            throw std::logic_error("replication-grid path does not land on phi(t)");
        if (!up)
            std::reverse(p.begin(), p.end());
        return p;
    };
    return E;
}

// ------------------------------------------------------------------ sparse

namespace {

inline bool test_bit(const PackedCode& p, int b) { return (p.w[b / 64] >> (b % 64)) & 1; }
inline void assign_bit(PackedCode& p, int b, bool v) {
    uint64_t mask = 1ull << (b % 64);
    if (v)
        p.w[b / 64] |= mask;
    else
        p.w[b / 64] &= ~mask;
}

} // namespace

struct SparseReplicationEmbedding::Index {
    int n_base = 0;
    CodeLayout base_layout;
    std::vector<VertexCode> source_vertices;
    std::vector<std::pair<uint64_t, uint64_t>> edges;
    std::vector<std::vector<PackedCode>> paths; // base path codes, endpoints included
    std::unordered_map<PackedCode, ViedIndex::Interior, PackedCodeHash> interior;
    std::unordered_map<PackedCode, uint64_t, PackedCodeHash> image;
    std::vector<std::vector<uint32_t>> incident;
    uint64_t source_count = 0;
};

SparseReplicationEmbedding::SparseReplicationEmbedding(int M)
    : base_(embed_replication_into_hypercube(M)) {
    auto ix = std::make_shared<Index>();
    ix->n_base = base_.dimension;
    ix->base_layout = base_.emb.target->layout();

    const Graph& src = *base_.emb.source;
    uint64_t n = *src.vertex_count();
    ix->source_count = n;
    ix->source_vertices.reserve(n);
    ix->incident.resize(n);
    for (uint64_t i = 0; i < n; ++i) {
        ix->source_vertices.push_back(src.vertex_at(i));
        ix->image.emplace(ix->base_layout.pack(base_.emb.phi(ix->source_vertices[i])), i);
    }
    for (uint64_t i = 0; i < n; ++i) {
        for (const VertexCode& w : src.neighbors(ix->source_vertices[i])) {
            uint64_t j = src.index_of(w);
            if (j <= i)
                continue;
            uint32_t eid = static_cast<uint32_t>(ix->edges.size());
            std::vector<VertexCode> p = base_.emb.path(ix->source_vertices[i], w);
            std::vector<PackedCode> packed;
            packed.reserve(p.size());
            for (const VertexCode& x : p)
                packed.push_back(ix->base_layout.pack(x));
            for (uint32_t k = 1; k + 1 < packed.size(); ++k)
                ix->interior.emplace(packed[k], ViedIndex::Interior{eid, k});
            ix->edges.emplace_back(i, j);
            ix->paths.push_back(std::move(packed));
            ix->incident[i].push_back(eid);
            ix->incident[j].push_back(eid);
        }
    }
    index_ = ix;

    auto triple = [](const VertexCode& c) {
        VertexCode out(3 * c.size());
        for (size_t i = 0; i < c.size(); ++i)
            out[3 * i] = out[3 * i + 1] = out[3 * i + 2] = c[i];
        return out;
    };
    auto base_phi = base_.emb.phi;
    auto base_path = base_.emb.path;
    emb_.name = "replication-hypercube-sparse:M=" + std::to_string(M);
    emb_.source = base_.emb.source;
    emb_.target = std::make_shared<Hypercube>(3 * base_.dimension);
    emb_.phi = [triple, base_phi](const VertexCode& v) { return triple(base_phi(v)); };
    emb_.path = [triple, base_path](const VertexCode& u, const VertexCode& v) {
        std::vector<VertexCode> base = base_path(u, v);
        std::vector<VertexCode> out;
        out.reserve(3 * base.size());
        VertexCode cur = triple(base[0]);
        out.push_back(cur);
        for (size_t k = 1; k < base.size(); ++k) {
            int bit = -1;
            for (size_t b = 0; b < base[k].size(); ++b)
                if (base[k][b] != base[k - 1][b])
                    bit = static_cast<int>(b);
            for (int j = 0; j < 3; ++j) {
                cur[3 * bit + j] ^= 1;
                out.push_back(cur);
            }
        }
        return out;
    };
}

uint64_t SparseReplicationEmbedding::source_count() const { return index_->source_count; }

VertexCode SparseReplicationEmbedding::tripled_phi(uint64_t source_index) const {
    return emb_.phi(index_->source_vertices[source_index]);
}

VertexCode SparseReplicationEmbedding::sample_path_vertex(Rng& rng, int flips) const {
    const auto& paths = index_->paths;
    const auto& path = paths[rng.below(paths.size())];
    PackedCode base = path[rng.below(path.size())];
    VertexCode out(3 * index_->n_base);
    for (int b = 0; b < index_->n_base; ++b) {
        int bit = test_bit(base, b) ? 1 : 0;
        out[3 * b] = out[3 * b + 1] = out[3 * b + 2] = bit;
    }
    for (int f = 0; f < flips; ++f)
        out[rng.below(out.size())] ^= 1;
    return out;
}

Value SparseReplicationEmbedding::sampled_pair_distance(Rng& rng) const {
    const Index& ix = *index_;
    for (;;) {
        uint32_t e1 = static_cast<uint32_t>(rng.below(ix.edges.size()));
        uint32_t e2 = static_cast<uint32_t>(rng.below(ix.edges.size()));
        auto [a1, b1] = ix.edges[e1];
        auto [a2, b2] = ix.edges[e2];
        if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2)
            continue;
        PackedCode x = ix.paths[e1][rng.below(ix.paths[e1].size())];
        PackedCode y = ix.paths[e2][rng.below(ix.paths[e2].size())];
        Value d = 0;
        for (int wi = 0; wi < 6; ++wi)
            d += std::popcount(x.w[wi] ^ y.w[wi]);
        return 3 * d;
    }
}

namespace {

// Path interiors of a single tripled flip, in flip order 3b, 3b+1, 3b+2:
// raising a bit passes through patterns 100 then 110 (values 1, 3); lowering
// through 011 then 001 (values 6, 4).
inline bool pattern_up(int p) { return p == 1 || p == 3; }
inline bool pattern_down(int p) { return p == 6 || p == 4; }
inline bool uniform(int p) { return p == 0 || p == 7; }

} // namespace

uint64_t SparseReplicationEmbedding::ball_intersection(const VertexCode& w) const {
    const Index& ix = *index_;
    const int nb = ix.n_base;
    if (static_cast<int>(w.size()) != 3 * nb)
        throw std::invalid_argument("ball_intersection: code has wrong dimension");

    std::vector<uint8_t> pat(nb);
    PackedCode rounded{};
    std::vector<int> rough; // non-uniform triples of w itself
    for (int t = 0; t < nb; ++t) {
        int p = w[3 * t] | (w[3 * t + 1] << 1) | (w[3 * t + 2] << 2);
        pat[t] = static_cast<uint8_t>(p);
        if (p == 7)
            assign_bit(rounded, t, true);
        else if (p != 0)
            rough.push_back(t);
    }
    // Two flips repair at most two triples; image points have at most one
    // non-uniform triple.
    if (rough.size() > 3)
        return 0;

    auto consecutive = [&ix](const PackedCode& z, const PackedCode& z2) -> bool {
        if (auto it = ix.interior.find(z); it != ix.interior.end())
            return ix.paths[it->second.edge][it->second.pos + 1] == z2;
        if (auto it = ix.image.find(z); it != ix.image.end()) {
            for (uint32_t eid : ix.incident[it->second])
                if (ix.edges[eid].first == it->second && ix.paths[eid][1] == z2)
                    return true;
        }
        return false;
    };

    // Membership of w with bits f1 (and f2, if >= 0) flipped.
    auto member = [&](int f1, int f2) -> bool {
        int t1 = f1 < 0 ? -1 : f1 / 3;
        int t2 = f2 < 0 ? -1 : f2 / 3;
        int p1 = -1, p2 = -1;
        if (t1 >= 0) {
            p1 = pat[t1] ^ (1 << (f1 % 3));
            if (t2 == t1) {
                p1 ^= 1 << (f2 % 3);
                t2 = -1;
            }
        }
        if (t2 >= 0)
            p2 = pat[t2] ^ (1 << (f2 % 3));

        int nc = static_cast<int>(rough.size());
        if (t1 >= 0)
            nc += !uniform(p1) - !uniform(pat[t1]);
        if (t2 >= 0)
            nc += !uniform(p2) - !uniform(pat[t2]);
        if (nc > 1)
            return false;

        PackedCode y = rounded;
        if (t1 >= 0 && uniform(p1))
            assign_bit(y, t1, p1 == 7);
        if (t2 >= 0 && uniform(p2))
            assign_bit(y, t2, p2 == 7);

        int b = -1, p = 0;
        if (t1 >= 0 && !uniform(p1)) {
            b = t1;
            p = p1;
        } else if (t2 >= 0 && !uniform(p2)) {
            b = t2;
            p = p2;
        } else {
            for (int r : rough)
                if (r != t1 && r != t2) {
                    b = r;
                    p = pat[r];
                    break;
                }
        }

        if (b < 0)
            return ix.interior.count(y) || ix.image.count(y);
        if (pattern_up(p)) {
            assign_bit(y, b, false);
            PackedCode z2 = y;
            assign_bit(z2, b, true);
            return consecutive(y, z2);
        }
        if (pattern_down(p)) {
            assign_bit(y, b, true);
            PackedCode z2 = y;
            assign_bit(z2, b, false);
            return consecutive(y, z2);
        }
        return false;
    };

    const int dim = 3 * nb;
    uint64_t count = member(-1, -1) ? 1 : 0;
    for (int f1 = 0; f1 < dim; ++f1)
        if (member(f1, -1))
            ++count;
    for (int f1 = 0; f1 < dim; ++f1)
        for (int f2 = f1 + 1; f2 < dim; ++f2)
            if (member(f1, f2))
                ++count;
    return count;
}

} // namespace ccls
