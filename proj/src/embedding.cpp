#include "ccls/embedding.hpp"

#include "ccls/rng.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ccls {

namespace {

struct EdgeRef {
    uint64_t u, v; // source indices, index_of(u) < index_of(v)
};

std::vector<EdgeRef> enumerate_edges(const Graph& g) {
    auto n = g.vertex_count();
    if (!n || *n > kBruteForceCap)
        throw std::length_error("verify_vied: source graph not enumerable");
    std::vector<EdgeRef> out;
    for (uint64_t i = 0; i < *n; ++i) {
        for (const VertexCode& w : g.neighbors(g.vertex_at(i))) {
            uint64_t j = g.index_of(w);
            if (j > i)
                out.push_back({i, j});
        }
    }
    return out;
}

std::string edge_str(const ViedIndex& ix, uint32_t e) {
    return "{" + code_str(ix.source_vertices[ix.edges[e].first]) + ", " +
           code_str(ix.source_vertices[ix.edges[e].second]) + "}";
}

} // namespace

ViedReport verify_vied(const VIEDEmbedding& emb, const VerifyOptions& opts) {
    ViedReport rep;
    auto ix = std::make_shared<ViedIndex>();
    ix->target_layout = emb.target->layout();
    const CodeLayout& lay = ix->target_layout;

    auto fail = [&rep](std::string kind, std::string detail) -> ViedReport& {
        rep.ok = false;
        rep.violation = ViedViolation{std::move(kind), std::move(detail)};
        return rep;
    };

    uint64_t n = *emb.source->vertex_count();
    rep.vertices = n;
    ix->source_vertices.reserve(n);
    for (uint64_t i = 0; i < n; ++i)
        ix->source_vertices.push_back(emb.source->vertex_at(i));

    // Property 1: phi is injective (and lands in the target).
    ix->image.reserve(n * 2);
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode img = emb.phi(ix->source_vertices[i]);
        if (!emb.target->contains(img))
            return fail("phi-range", "phi(" + code_str(ix->source_vertices[i]) +
                                         ") = " + code_str(img) + " is not a target vertex");
        auto [it, fresh] = ix->image.emplace(lay.pack(img), i);
        if (!fresh)
            return fail("phi-not-injective",
                        "phi collides on " + code_str(ix->source_vertices[it->second]) + " and " +
                            code_str(ix->source_vertices[i]));
    }

    std::vector<EdgeRef> all_edges = enumerate_edges(*emb.source);
    std::vector<uint64_t> picked(all_edges.size());
    std::iota(picked.begin(), picked.end(), 0);
    std::vector<uint64_t> sampled_vertices;
    if (opts.sample > 0 && opts.sample < all_edges.size()) {
        rep.exhaustive = false;
        Rng rng = seeded_rng(opts.seed);
        for (size_t i = picked.size(); i > 1; --i)
            std::swap(picked[i - 1], picked[rng.below(i)]);
        picked.resize(opts.sample);
        std::sort(picked.begin(), picked.end());
        for (uint64_t k = 0; k < std::min<uint64_t>(opts.sample, n); ++k)
            sampled_vertices.push_back(rng.below(n));
    }

    // Properties 2 and 3: every path is a simple target path with the right
    // endpoints, and interiors never meet (nor run through a phi image).
    ix->edges.reserve(picked.size());
    ix->path_edge_count.reserve(picked.size());
    ix->interior.reserve(picked.size() * 12);
    std::vector<PackedCode> seen_on_path;
    for (uint64_t pick : picked) {
        const EdgeRef& e = all_edges[pick];
        uint32_t eid = static_cast<uint32_t>(ix->edges.size());
        const VertexCode& su = ix->source_vertices[e.u];
        const VertexCode& sv = ix->source_vertices[e.v];
        std::vector<VertexCode> p = emb.path(su, sv);
        std::string ename = "{" + code_str(su) + ", " + code_str(sv) + "}";
        if (p.size() < 2)
            return fail("path-endpoints", "path of " + ename + " has fewer than two vertices");
        if (!(p.front() == emb.phi(su)) || !(p.back() == emb.phi(sv)))
            return fail("path-endpoints", "path of " + ename + " does not join phi(u) to phi(v)");
        seen_on_path.clear();
        for (size_t k = 0; k < p.size(); ++k) {
            if (!emb.target->contains(p[k]))
                return fail("path-invalid-step",
                            "path of " + ename + " leaves the target at " + code_str(p[k]));
            if (k > 0 && !emb.target->adjacent(p[k - 1], p[k]))
                return fail("path-invalid-step", "path of " + ename + " jumps from " +
                                                     code_str(p[k - 1]) + " to " + code_str(p[k]));
            seen_on_path.push_back(lay.pack(p[k]));
        }
        std::vector<PackedCode> sorted = seen_on_path;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail("path-not-simple", "path of " + ename + " repeats a vertex");
        ix->edges.emplace_back(e.u, e.v);
        ix->path_edge_count.push_back(static_cast<uint32_t>(p.size() - 1));
        for (size_t k = 1; k + 1 < p.size(); ++k) {
            const PackedCode& key = seen_on_path[k];
            if (auto hit = ix->image.find(key); hit != ix->image.end())
                return fail("isolation", "path of " + ename + " passes through phi(" +
                                             code_str(ix->source_vertices[hit->second]) + ")");
            auto [it, fresh] =
                ix->interior.emplace(key, ViedIndex::Interior{eid, static_cast<uint32_t>(k)});
            if (!fresh)
                return fail("interior-overlap",
                            "paths of " + edge_str(*ix, it->second.edge) + " and " + ename +
                                " share interior vertex " + code_str(p[k]));
        }
        rep.path_vertices += p.size();
    }
    rep.edges = ix->edges.size();

    // Incidence sets for the isolation pass.
    std::vector<std::vector<uint32_t>> incident(n);
    for (uint32_t eid = 0; eid < ix->edges.size(); ++eid) {
        incident[ix->edges[eid].first].push_back(eid);
        incident[ix->edges[eid].second].push_back(eid);
    }

    // Property 4: nothing of a non-incident path comes within distance 1 of
    // phi(v). Scan the closed radius-1 ball of every phi(v) against the
    // interior map and the image set.
    auto isolation_at = [&](uint64_t i) -> std::optional<ViedViolation> {
        const VertexCode& sv = ix->source_vertices[i];
        VertexCode img = emb.phi(sv);
        std::vector<VertexCode> ball = emb.target->neighbors(img);
        ball.push_back(img);
        for (const VertexCode& x : ball) {
            PackedCode key = lay.pack(x);
            if (auto hit = ix->interior.find(key); hit != ix->interior.end()) {
                const auto& edge = ix->edges[hit->second.edge];
                if (edge.first != i && edge.second != i)
                    return ViedViolation{"isolation",
                                         "interior vertex " + code_str(x) + " of path " +
                                             edge_str(*ix, hit->second.edge) + " is at distance <= 1 from phi(" +
                                             code_str(sv) + ")"};
            }
            if (auto hit = ix->image.find(key); hit != ix->image.end() && hit->second != i) {
                // phi(w) lies on every path of an edge incident to w; any
                // such edge avoiding v witnesses the violation.
                for (uint32_t eid : incident[hit->second]) {
                    const auto& edge = ix->edges[eid];
                    if (edge.first != i && edge.second != i)
                        return ViedViolation{"isolation",
                                             "phi(" + code_str(ix->source_vertices[hit->second]) +
                                                 ") on path " + edge_str(*ix, eid) +
                                                 " is at distance <= 1 from phi(" + code_str(sv) + ")"};
                }
            }
        }
        return std::nullopt;
    };

    if (rep.exhaustive) {
        for (uint64_t i = 0; i < n; ++i)
            if (auto bad = isolation_at(i)) {
                rep.violation = bad;
                return rep;
            }
    } else {
        for (uint64_t i : sampled_vertices)
            if (auto bad = isolation_at(i)) {
                rep.violation = bad;
                return rep;
            }
    }

    rep.ok = true;
    if (opts.keep_index)
        rep.index = ix;
    return rep;
}

VetoLSInstance transfer_vetols(const VIEDEmbedding& emb, const VetoLSInstance& inst,
                               const ViedReport& proof) {
    if (!proof.ok || !proof.exhaustive)
        throw std::invalid_argument("transfer_vetols: embedding is not exhaustively verified");
    if (!proof.index)
        throw std::invalid_argument("transfer_vetols: verification index was not kept");
    std::shared_ptr<const ViedIndex> ix = proof.index;

    // Endpoint potentials must differ along every edge, else no direction of
    // the interpolated path strictly improves.
    std::vector<Value> f(ix->source_vertices.size());
    std::vector<uint8_t> in_s(ix->source_vertices.size());
    for (size_t i = 0; i < ix->source_vertices.size(); ++i) {
        f[i] = inst.potential(ix->source_vertices[i]);
        in_s[i] = inst.valid(ix->source_vertices[i]) ? 1 : 0;
    }
    Value scale = 1;
    for (uint32_t e = 0; e < ix->edges.size(); ++e) {
        auto [iu, iv] = ix->edges[e];
        if (f[iu] == f[iv])
            throw std::invalid_argument("transfer_vetols: equal potentials on adjacent vertices " +
                                        code_str(ix->source_vertices[iu]) + " and " +
                                        code_str(ix->source_vertices[iv]));
        Value l = ix->path_edge_count[e];
        Value g = std::gcd(scale, l);
        if (scale > ((Value)1 << 50) / (l / g))
            throw std::overflow_error("transfer_vetols: lcm of path lengths overflows");
        scale = scale / g * l;
    }

    auto fv = std::make_shared<std::vector<Value>>(std::move(f));
    auto sv = std::make_shared<std::vector<uint8_t>>(std::move(in_s));
    CodeLayout lay = ix->target_layout;
    Value w_bound = inst.value_bound * scale;

    VetoLSInstance out;
    out.graph = emb.target;
    out.value_bound = w_bound;
    out.potential = [ix, fv, lay, scale](const VertexCode& x) -> Value {
        PackedCode key = lay.pack(x);
        if (auto hit = ix->image.find(key); hit != ix->image.end())
            return (*fv)[hit->second] * scale;
        if (auto hit = ix->interior.find(key); hit != ix->interior.end()) {
            auto [iu, iv] = ix->edges[hit->second.edge];
            Value l = ix->path_edge_count[hit->second.edge];
            Value k = hit->second.pos;
            return ((l - k) * (*fv)[iu] * scale + k * (*fv)[iv] * scale) / l;
        }
        return 0;
    };
    out.valid = [ix, sv, lay](const VertexCode& x) -> bool {
        PackedCode key = lay.pack(x);
        if (auto hit = ix->image.find(key); hit != ix->image.end())
            return (*sv)[hit->second] != 0;
        if (auto hit = ix->interior.find(key); hit != ix->interior.end()) {
            auto [iu, iv] = ix->edges[hit->second.edge];
            return (*sv)[iu] != 0 && (*sv)[iv] != 0;
        }
        return false;
    };
    return out;
}

} // namespace ccls
