#include "ccls/solvers.hpp"

#include <cmath>
#include <stdexcept>

namespace ccls {

SolveResult steepest_ascent(const QueryInstance& inst, const VertexCode& start) {
    inst.graph()->require(start);
    uint64_t before = inst.query_count();
    SolveResult out;
    out.vertex = start;
    out.value = inst.value(start);
    for (;;) {
        bool moved = false;
        VertexCode best;
        Value best_val = out.value;
        for (VertexCode& w : inst.graph()->neighbors(out.vertex)) {
            Value vw = inst.value(w);
            if (vw > best_val || (moved && vw == best_val && w < best)) {
                best = std::move(w);
                best_val = vw;
                moved = true;
            }
        }
        if (!moved)
            break;
        out.vertex = std::move(best);
        out.value = best_val;
        ++out.steps;
    }
    out.queries = inst.query_count() - before;
    return out;
}

SolveResult aldous_search(const QueryInstance& inst, uint64_t samples, uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("aldous_search: need at least one sample");
    auto count = inst.graph()->vertex_count();
    if (!count)
        throw std::length_error("aldous_search: graph not enumerable for sampling");
    uint64_t before = inst.query_count();
    Rng rng = seeded_rng(seed);

    uint64_t best_idx = 0;
    Value best_val = 0;
    bool have = false;
    for (uint64_t s = 0; s < samples; ++s) {
        uint64_t idx = rng.below(*count);
        Value v = inst.value(inst.graph()->vertex_at(idx));
        if (!have || v > best_val || (v == best_val && idx < best_idx)) {
            best_idx = idx;
            best_val = v;
            have = true;
        }
    }
    SolveResult out = steepest_ascent(inst, inst.graph()->vertex_at(best_idx));
    out.queries = inst.query_count() - before;
    return out;
}

uint64_t aldous_default_samples(const Graph& g) {
    auto count = g.vertex_count();
    if (!count)
        throw std::length_error("aldous_default_samples: graph not enumerable");
    long double t = std::sqrt(static_cast<long double>(*count) * g.degree_bound());
    return static_cast<uint64_t>(std::ceil(t));
}

} // namespace ccls
