#pragma once

#include "ccls/search.hpp"

namespace ccls {

struct SolveResult {
    VertexCode vertex;
    Value value = 0;
    uint64_t queries = 0; // oracle evaluations, counted by the instance
    uint64_t steps = 0;   // strict moves taken
};

// Greedy ascent: move to the strictly best-improving neighbor (value ties
// broken by smaller code) until none improves. Ends at a weak local
// maximum under the shared comparator.
SolveResult steepest_ascent(const QueryInstance& inst, const VertexCode& start);

// Sample-then-climb: query `samples` seeded-uniform vertices, steepest
// ascent from the best of them. Always returns a true local maximum.
SolveResult aldous_search(const QueryInstance& inst, uint64_t samples, uint64_t seed);

// The default sample budget sqrt(|V| * maxdeg).
uint64_t aldous_default_samples(const Graph& g);

} // namespace ccls
