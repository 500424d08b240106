#pragma once

#include "ccls/embedding.hpp"
#include "ccls/pebbling.hpp"
#include "ccls/search.hpp"

#include <iostream>
#include <map>
#include <string>

namespace ccls {

// Graph references used on the command line and inside instance files:
//   hyp:<n>  grid:<a>x<b>x...  odd:<k>  pebb-dag:<M>  replication:<M>
//   k<n>  cycle:<n>  path:<n>  rand3reg:<n>:<seed>  tree:<ref>:<M>
//   file:<path> (explicit graph file)
GraphPtr parse_graph_ref(const std::string& ref);

// Explicit graph files: "graph <name> <n> <m>" then one "edge u v" per line.
void write_graph(std::ostream& out, const ExplicitGraph& g);
std::shared_ptr<ExplicitGraph> read_graph(std::istream& in);

// Pebbling instances: "pebb M=<M>", then "b k1:k2:k3:k4 <slot> <bit>" and
// "I k1:k2:k3:k4 <slot>" lines.
void write_pebb(std::ostream& out, const PebbInstance& inst);
PebbInstance read_pebb(std::istream& in);

// Search-problem instances: "instance <kind>" (sumls | vetols | query),
// "graph <ref>", "W <bound>", then either explicit value lines
// ("fa <code> <v>", "fb <code> <v>", "f <code> <v>", "valid <code>") or a
// one-line "generator <name> <seed>" with name in {random, random-distinct,
// lifted:<M>}.
struct InstanceFile {
    std::string kind;
    GraphPtr graph;
    Value value_bound = 0;
    std::string generator; // empty = explicit tables
    uint64_t seed = 0;
    std::map<uint64_t, Value> fa, fb, f; // by vertex index
    std::vector<uint64_t> valid;
};
InstanceFile read_instance(std::istream& in);
SumLSInstance instance_as_sumls(const InstanceFile& f);
VetoLSInstance instance_as_vetols(const InstanceFile& f);
QueryInstance instance_as_query(const InstanceFile& f);
void write_sumls(std::ostream& out, const SumLSInstance& inst);
void write_vetols(std::ostream& out, const VetoLSInstance& inst);
void write_query(std::ostream& out, const QueryInstance& inst);

// Embeddings: "embedding", "source <ref>", "target <ref>", then
// "phi <code> -> <code>" and "chi <u> <v> : <code>,<code>,..." lines.
void write_embedding(std::ostream& out, const VIEDEmbedding& emb);
VIEDEmbedding read_embedding(std::istream& in);

// Two-player payoff tables: "game2p <na> <nb>", "ua"/"ub" blocks of rows.
void write_game2p_tables(std::ostream& out, const std::vector<std::vector<Value>>& ua,
                         const std::vector<std::vector<Value>>& ub);
void read_game2p_tables(std::istream& in, std::vector<std::vector<Value>>& ua,
                        std::vector<std::vector<Value>>& ub);

// One line-delimited machine-readable record: "schema=<name> k=v k=v ...".
// Keys are emitted in the order given; all numbers print in decimal, so
// equal inputs give byte-identical records.
std::string report_line(const std::string& schema,
                        const std::vector<std::pair<std::string, std::string>>& fields);

} // namespace ccls
