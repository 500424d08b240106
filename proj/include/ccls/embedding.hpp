#pragma once

#include "ccls/search.hpp"

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

namespace ccls {

// Vertex-isolated edge-disjoint embedding of a source graph into a target:
// an injective vertex map phi plus, per source edge, a simple target path
// joining the mapped endpoints. Distinct paths have disjoint interiors, and
// every path of an edge not incident to v stays at target distance >= 2
// from phi(v). Paths are produced oriented: path(u, v) starts at phi(u) and
// must equal the reverse of path(v, u).
struct VIEDEmbedding {
    std::string name;
    GraphPtr source;
    GraphPtr target;
    std::function<VertexCode(const VertexCode&)> phi;
    std::function<std::vector<VertexCode>(const VertexCode&, const VertexCode&)> path;
};

struct ViedViolation {
    std::string kind;   // which of the four properties failed
    std::string detail; // rendered witness
};

// Retained artifacts of a verification pass; transfer_vetols consumes them
// so the embedding is only walked once.
struct ViedIndex {
    CodeLayout target_layout;
    std::vector<VertexCode> source_vertices;                      // by source index
    std::vector<std::pair<uint64_t, uint64_t>> edges;             // source index pairs, canonical
    std::vector<uint32_t> path_edge_count;                        // l(e): edges on the path
    struct Interior {
        uint32_t edge;
        uint32_t pos; // 1..l-1
    };
    std::unordered_map<PackedCode, Interior, PackedCodeHash> interior;
    std::unordered_map<PackedCode, uint64_t, PackedCodeHash> image; // phi(v) -> source index
};

struct ViedReport {
    bool ok = false;
    bool exhaustive = true;
    uint64_t vertices = 0;
    uint64_t edges = 0;
    uint64_t path_vertices = 0;
    std::optional<ViedViolation> violation;
    std::shared_ptr<const ViedIndex> index; // present when ok
};

struct VerifyOptions {
    // 0 = exhaustive. Otherwise verify `sample` seeded-random edges and
    // vertices only (disjointness and isolation then hold relative to the
    // sampled paths; the report is marked non-exhaustive).
    uint64_t sample = 0;
    uint64_t seed = 0;
    bool keep_index = true;
};

// Checks the four defining properties against the target's neighbor oracle,
// without materializing the target. Stops at the first violation and
// reports a witness.
ViedReport verify_vied(const VIEDEmbedding& emb, const VerifyOptions& opts = {});

// VetoLS transfer along a verified embedding. Mapped vertices keep their
// potential, interior path vertices interpolate linearly between the
// endpoint potentials (made exact by pre-scaling every value by the lcm of
// the path lengths), everything else is worthless and invalid. Valid local
// maxima of the output correspond exactly to phi of the input's valid local
// maxima. Throws std::invalid_argument on an unverified embedding or when
// some edge has equal endpoint potentials.
VetoLSInstance transfer_vetols(const VIEDEmbedding& emb, const VetoLSInstance& inst,
                               const ViedReport& proof);

} // namespace ccls
