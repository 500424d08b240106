#pragma once

#include "ccls/embedding.hpp"

namespace ccls {

// VIED embedding of Hyp_n into Odd_{n+2}. A hypercube vertex, read as a
// subset S of [n+1] with the extra element unused, maps to S together with
// the shifted complement; each cube edge becomes a two-hop odd-graph path
// through a pivot containing the top ground element. The shifted-complement
// vertices never appear in the image, which is what isolates the mapped
// vertices.
VIEDEmbedding embed_hypercube_into_odd(int n);

} // namespace ccls
