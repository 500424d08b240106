#include "ccls/search.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccls {

namespace {

uint64_t enumerable_size(const Graph& g, uint64_t cap) {
    auto n = g.vertex_count();
    if (!n || *n > cap)
        throw std::length_error(g.name() +
                                ": brute-force scan refused, graph exceeds the enumeration cap; "
                                "use sampled local checks instead");
    return *n;
}

} // namespace

QueryInstance SimLSInstance::composed(
    std::shared_ptr<std::vector<std::pair<uint64_t, int>>> access_log) const {
    auto arrays_p = std::make_shared<std::vector<std::vector<Value>>>(arrays);
    auto index_p = std::make_shared<std::vector<int>>(bob_index);
    GraphPtr g = graph;
    ValueFn h = [g, arrays_p, index_p, access_log](const VertexCode& v) {
        uint64_t idx = g->index_of(v);
        int slot = (*index_p)[idx];
        if (access_log)
            access_log->emplace_back(idx, slot);
        return (*arrays_p)[idx][slot];
    };
    return QueryInstance(g, std::move(h));
}

bool is_local_max(const Graph& g, const ValueFn& f, const VertexCode& v) {
    Value fv = f(v);
    for (const VertexCode& w : g.neighbors(v))
        if (f(w) > fv)
            return false;
    return true;
}

bool is_valid_local_max(const VetoLSInstance& inst, const VertexCode& v) {
    if (!inst.valid(v))
        return false;
    Value fv = inst.potential(v);
    for (const VertexCode& w : inst.graph->neighbors(v))
        if (inst.valid(w) && inst.potential(w) > fv)
            return false;
    return true;
}

std::vector<VertexCode> local_maxima(const SumLSInstance& inst, uint64_t cap) {
    uint64_t n = enumerable_size(*inst.graph, cap);
    ValueFn sum = [&inst](const VertexCode& v) { return inst.sum(v); };
    std::vector<VertexCode> out;
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        if (is_local_max(*inst.graph, sum, v))
            out.push_back(std::move(v));
    }
    return out;
}

std::vector<VertexCode> local_maxima(const QueryInstance& inst, uint64_t cap) {
    uint64_t n = enumerable_size(*inst.graph(), cap);
    std::vector<VertexCode> out;
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph()->vertex_at(i);
        if (is_local_max(*inst.graph(), inst.raw(), v))
            out.push_back(std::move(v));
    }
    return out;
}

std::vector<VertexCode> valid_local_maxima(const VetoLSInstance& inst, uint64_t cap) {
    uint64_t n = enumerable_size(*inst.graph, cap);
    std::vector<VertexCode> out;
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        if (is_valid_local_max(inst, v))
            out.push_back(std::move(v));
    }
    return out;
}

SumLSInstance veto_to_sum(const VetoLSInstance& inst, const VertexCode& vstar, uint64_t cap) {
    inst.graph->require(vstar);
    if (!inst.valid(vstar))
        throw std::invalid_argument("veto_to_sum: anchor vertex is not valid");

    GraphPtr g = inst.graph;
    Value w = inst.value_bound;
    MemberFn valid = inst.valid;

    // Distance oracle from vstar. Small graphs get one BFS table; implicit
    // families answer through their analytic metric.
    ValueFn dist_to_star;
    if (g->analytic_distance(vstar, vstar)) {
        VertexCode anchor = vstar;
        dist_to_star = [g, anchor](const VertexCode& v) { return *g->analytic_distance(v, anchor); };
    } else {
        uint64_t size = enumerable_size(*g, cap);
        auto table = std::make_shared<std::vector<Value>>(size, -1);
        std::vector<uint64_t> queue;
        queue.push_back(g->index_of(vstar));
        (*table)[queue[0]] = 0;
        for (size_t head = 0; head < queue.size(); ++head) {
            uint64_t cur = queue[head];
            Value d = (*table)[cur];
            for (const VertexCode& nb : g->neighbors(g->vertex_at(cur))) {
                uint64_t j = g->index_of(nb);
                if ((*table)[j] < 0) {
                    (*table)[j] = d + 1;
                    queue.push_back(j);
                }
            }
        }
        for (uint64_t i = 0; i < size; ++i)
            if ((*table)[i] < 0)
                throw std::domain_error("veto_to_sum: graph is disconnected, " +
                                        code_str(g->vertex_at(i)) + " unreachable from anchor");
        dist_to_star = [g, table](const VertexCode& v) { return (*table)[g->index_of(v)]; };
    }

    SumLSInstance out;
    out.graph = g;
    out.f_a = inst.potential;
    out.f_b = [valid, dist_to_star, w](const VertexCode& v) -> Value {
        if (valid(v))
            return 0;
        return -dist_to_star(v) * (w + 1);
    };
    out.value_bound = w;
    return out;
}

QueryInstance distinctify(const QueryInstance& q) {
    GraphPtr g = q.graph();
    auto n = g->vertex_count();
    if (!n)
        throw std::length_error("distinctify: graph not enumerable");
    Value big_n = static_cast<Value>(*n);
    QueryInstance base = q;
    ValueFn h = [g, big_n, base](const VertexCode& v) {
        return 2 * big_n * base.value(v) + static_cast<Value>(g->index_of(v)) + 1;
    };
    return QueryInstance(g, std::move(h));
}

SimLSInstance simls_build(const QueryInstance& q, int gadget_size, uint64_t seed) {
    if (gadget_size < 1)
        throw std::invalid_argument("simls_build: gadget size must be >= 1");
    GraphPtr g = q.graph();
    uint64_t n = enumerable_size(*g, kBruteForceCap);

    std::vector<Value> h(n);
    Value vmax = 1;
    for (uint64_t i = 0; i < n; ++i) {
        h[i] = q.raw()(g->vertex_at(i));
        vmax = std::max(vmax, h[i] < 0 ? -h[i] : h[i]);
    }

    Rng rng = seeded_rng(seed);
    SimLSInstance out;
    out.graph = g;
    out.gadget_size = gadget_size;
    out.bob_index.resize(n);
    out.arrays.assign(n, std::vector<Value>(gadget_size));
    for (uint64_t i = 0; i < n; ++i) {
        out.bob_index[i] = static_cast<int>(rng.below(gadget_size));
        for (int s = 0; s < gadget_size; ++s)
            out.arrays[i][s] = rng.range(1, vmax);
        out.arrays[i][out.bob_index[i]] = h[i];
    }
    return out;
}

SumLSInstance random_sumls(GraphPtr g, Value w, Rng& rng, bool require_distinct_adjacent_sums) {
    uint64_t n = enumerable_size(*g, kBruteForceCap);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        auto fa = std::make_shared<std::vector<Value>>(n);
        auto fb = std::make_shared<std::vector<Value>>(n);
        for (uint64_t i = 0; i < n; ++i) {
            (*fa)[i] = rng.range(1, w);
            (*fb)[i] = rng.range(1, w);
        }
        if (require_distinct_adjacent_sums) {
            bool ok = true;
            for (uint64_t i = 0; i < n && ok; ++i) {
                VertexCode v = g->vertex_at(i);
                Value s = (*fa)[i] + (*fb)[i];
                for (const VertexCode& u : g->neighbors(v))
                    if ((*fa)[g->index_of(u)] + (*fb)[g->index_of(u)] == s) {
                        ok = false;
                        break;
                    }
            }
            if (!ok)
                continue;
        }
        SumLSInstance out;
        out.graph = g;
        out.f_a = [g, fa](const VertexCode& v) { return (*fa)[g->index_of(v)]; };
        out.f_b = [g, fb](const VertexCode& v) { return (*fb)[g->index_of(v)]; };
        out.value_bound = w;
        out.distinct_adjacent_sums = require_distinct_adjacent_sums;
        return out;
    }
    throw std::runtime_error("random_sumls: could not satisfy adjacent-sum distinctness; raise W");
}

VetoLSInstance random_vetols(GraphPtr g, Value w, Rng& rng) {
    uint64_t n = enumerable_size(*g, kBruteForceCap);
    auto f = std::make_shared<std::vector<Value>>(n);
    auto s = std::make_shared<std::vector<uint8_t>>(n);
    bool any = false;
    for (uint64_t i = 0; i < n; ++i) {
        (*f)[i] = rng.range(1, w);
        (*s)[i] = rng.coin() ? 1 : 0;
        any = any || (*s)[i];
    }
    if (!any)
        (*s)[rng.below(n)] = 1;
    VetoLSInstance out;
    out.graph = g;
    out.potential = [g, f](const VertexCode& v) { return (*f)[g->index_of(v)]; };
    out.valid = [g, s](const VertexCode& v) { return (*s)[g->index_of(v)] != 0; };
    out.value_bound = w;
    return out;
}

QueryInstance random_query(GraphPtr g, Value w, Rng& rng) {
    uint64_t n = enumerable_size(*g, kBruteForceCap);
    auto h = std::make_shared<std::vector<Value>>(n);
    for (uint64_t i = 0; i < n; ++i)
        (*h)[i] = rng.range(1, w);
    return QueryInstance(g, [g, h](const VertexCode& v) { return (*h)[g->index_of(v)]; });
}

} // namespace ccls
