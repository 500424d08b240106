#include "ccls/pebbling.hpp"

#include <stdexcept>

namespace ccls {

std::optional<VertexCode> pebb_promise_violation(const PebbInstance& inst) {
    const PebblingDag& d = *inst.dag;
    int M = d.M();
    int last = static_cast<int>(d.layers()) - 1;
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b)
            for (int c = 0; c < M; ++c) {
                VertexCode src{0, a, b, c};
                if (!inst.decoded(src))
                    return src;
                VertexCode sink{last, a, b, c};
                if (inst.decoded(sink))
                    return sink;
            }
    return std::nullopt;
}

bool pebb_check(const PebbInstance& inst, const VertexCode& v) {
    inst.dag->require(v);
    if (inst.decoded(v))
        return false;
    for (const VertexCode& u : inst.dag->predecessors(v))
        if (!inst.decoded(u))
            return false;
    return true;
}

std::vector<VertexCode> pebb_solve_bruteforce(const PebbInstance& inst) {
    uint64_t n = *inst.dag->vertex_count();
    std::vector<VertexCode> out;
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.dag->vertex_at(i);
        if (pebb_check(inst, v))
            out.push_back(std::move(v));
    }
    return out;
}

PebbInstance random_pebb(int M, Rng& rng) {
    PebbInstance inst;
    inst.dag = std::make_shared<PebblingDag>(M);
    uint64_t n = *inst.dag->vertex_count();
    inst.bits.resize(n);
    inst.slot.resize(n);
    for (uint64_t i = 0; i < n; ++i) {
        for (int s = 0; s < 3; ++s)
            inst.bits[i][s] = rng.coin() ? 1 : 0;
        inst.slot[i] = static_cast<uint8_t>(rng.below(3));
    }
    // Pin the promise on the decoded slot; other slots stay noise.
    int last = static_cast<int>(inst.dag->layers()) - 1;
    for (int a = 0; a < M; ++a)
        for (int b = 0; b < M; ++b)
            for (int c = 0; c < M; ++c) {
                uint64_t src = inst.dag->index_of({0, a, b, c});
                inst.bits[src][inst.slot[src]] = 1;
                uint64_t sink = inst.dag->index_of({last, a, b, c});
                inst.bits[sink][inst.slot[sink]] = 0;
            }
    return inst;
}

Value pebb_topological_number(const ReplicationGraph& g, const VertexCode& v) {
    return static_cast<Value>(*g.vertex_count()) - static_cast<Value>(g.index_of(v));
}

VetoLSInstance pebb_to_vetols(const PebbInstance& inst) {
    if (auto bad = pebb_promise_violation(inst))
        throw std::invalid_argument("pebb_to_vetols: promise violated at " + code_str(*bad));

    auto g = std::make_shared<ReplicationGraph>(inst.M());
    Value bonus = 6 * static_cast<Value>(*g->vertex_count());
    auto bits = std::make_shared<std::vector<std::array<uint8_t, 3>>>(inst.bits);
    auto slot = std::make_shared<std::vector<uint8_t>>(inst.slot);
    std::shared_ptr<const PebblingDag> dag = inst.dag;

    VetoLSInstance out;
    out.graph = g;
    out.potential = [g, dag, bits, bonus](const VertexCode& v) {
        VertexCode base(v.begin(), v.begin() + 4);
        bool bit = (*bits)[dag->index_of(base)][v[4]] != 0;
        return pebb_topological_number(*g, v) + (bit ? 0 : bonus);
    };
    out.valid = [dag, slot](const VertexCode& v) {
        VertexCode base(v.begin(), v.begin() + 4);
        return (*slot)[dag->index_of(base)] == v[4];
    };
    out.value_bound = static_cast<Value>(*g->vertex_count()) + bonus;
    return out;
}

} // namespace ccls
