#pragma once

#include "ccls/embedding.hpp"

namespace ccls {

// VIED embedding of an explicit graph with max degree 4 into the
// 4N x (2N+2) x 2 grid. Vertices sit on a spaced baseline; each edge climbs
// from a per-vertex terminal slot to its own row, crosses on the z=1 layer
// (verticals stay on z=0, horizontals on z=1) and descends at the far end.
VIEDEmbedding embed_degree4_into_grid3d(std::shared_ptr<const ExplicitGraph> g);

} // namespace ccls
