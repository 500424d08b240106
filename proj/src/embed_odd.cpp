#include "ccls/embed_odd.hpp"

#include <stdexcept>

namespace ccls {

namespace {

// S as a bitmask over [n+1] (bit e-1 = element e).
uint32_t subset_of(const VertexCode& v) {
    uint32_t s = 0;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i])
            s |= 1u << i;
    return s;
}

} // namespace

VIEDEmbedding embed_hypercube_into_odd(int n) {
    if (n < 1 || n > 13)
        throw std::invalid_argument("embed_hypercube_into_odd: n out of range");
    auto source = std::make_shared<Hypercube>(n);
    auto target = std::make_shared<OddGraph>(n + 2);

    const uint32_t full = (1u << (n + 1)) - 1; // ground set [n+1] of the inner cube
    const int shift = n + 1;
    const uint32_t top = 1u << (2 * n + 2); // element 2n+3

    auto phi_mask = [full, shift](uint32_t s) { return s | ((~s & full) << shift); };

    VIEDEmbedding emb;
    emb.name = "odd:n=" + std::to_string(n);
    emb.source = source;
    emb.target = target;
    emb.phi = [phi_mask](const VertexCode& v) -> VertexCode {
        return {static_cast<int>(phi_mask(subset_of(v)))};
    };
    emb.path = [phi_mask, full, shift, top](const VertexCode& u,
                                            const VertexCode& v) -> std::vector<VertexCode> {
        uint32_t su = subset_of(u), sv = subset_of(v);
        uint32_t diff = su ^ sv;
        if (std::popcount(diff) != 1)
            throw std::invalid_argument("embed_hypercube_into_odd: not a cube edge");
        uint32_t s = su & sv;                                   // the smaller endpoint
        uint32_t pivot = ((~s & full) & ~diff) | (s << shift) | top;
        VertexCode a{static_cast<int>(phi_mask(su))};
        VertexCode m{static_cast<int>(pivot)};
        VertexCode b{static_cast<int>(phi_mask(sv))};
        return {a, m, b};
    };
    return emb;
}

} // namespace ccls
