#include "ccls/io.hpp"

#include "ccls/lifted.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ccls {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string part;
    std::istringstream in(s);
    while (std::getline(in, part, sep))
        out.push_back(part);
    return out;
}

[[noreturn]] void bad_line(const std::string& what, const std::string& line) {
    throw std::invalid_argument(what + ": '" + line + "'");
}

} // namespace

GraphPtr parse_graph_ref(const std::string& ref) {
    auto parts = split(ref, ':');
    const std::string& kind = parts[0];
    if (kind == "hyp" && parts.size() == 2)
        return std::make_shared<Hypercube>(std::stoi(parts[1]));
    if (kind == "grid" && parts.size() == 2) {
        std::vector<int> dims;
        for (const std::string& d : split(parts[1], 'x'))
            dims.push_back(std::stoi(d));
        return std::make_shared<Grid>(dims);
    }
    if (kind == "odd" && parts.size() == 2)
        return std::make_shared<OddGraph>(std::stoi(parts[1]));
    if (kind == "pebb-dag" && parts.size() == 2)
        return std::make_shared<PebblingDag>(std::stoi(parts[1]));
    if (kind == "replication" && parts.size() == 2)
        return std::make_shared<ReplicationGraph>(std::stoi(parts[1]));
    if (kind == "cycle" && parts.size() == 2)
        return cycle_graph(std::stoi(parts[1]));
    if (kind == "path" && parts.size() == 2)
        return path_graph(std::stoi(parts[1]));
    if (kind == "rand3reg" && parts.size() == 3) {
        Rng rng = seeded_rng(std::stoull(parts[2]));
        return random_regular_graph(std::stoi(parts[1]), 3, rng);
    }
    if (kind == "tree" && parts.size() >= 3) {
        std::string base_ref = parts[1];
        for (size_t i = 2; i + 1 < parts.size(); ++i)
            base_ref += ":" + parts[i];
        auto base = std::dynamic_pointer_cast<const ExplicitGraph>(parse_graph_ref(base_ref));
        if (!base)
            throw std::invalid_argument("tree: base graph must be explicit");
        return build_tree_graph(base, std::stoi(parts.back()));
    }
    if (kind == "file" && parts.size() >= 2) {
        std::string path = ref.substr(5);
        std::ifstream in(path);
        if (!in)
            throw std::invalid_argument("cannot open graph file " + path);
        return read_graph(in);
    }
    if (kind.size() > 1 && kind[0] == 'k' && parts.size() == 1)
        return complete_graph(std::stoi(kind.substr(1)));
    throw std::invalid_argument("unknown graph reference '" + ref + "'");
}

void write_graph(std::ostream& out, const ExplicitGraph& g) {
    uint64_t n = *g.vertex_count();
    uint64_t m = 0;
    for (uint64_t v = 0; v < n; ++v)
        m += g.adjacency()[v].size();
    out << "graph " << g.name() << " " << n << " " << m / 2 << "\n";
    for (uint64_t v = 0; v < n; ++v)
        for (int w : g.adjacency()[v])
            if (static_cast<uint64_t>(w) > v)
                out << "edge " << v << " " << w << "\n";
}

std::shared_ptr<ExplicitGraph> read_graph(std::istream& in) {
    std::string tag, name;
    uint64_t n = 0, m = 0;
    if (!(in >> tag >> name >> n >> m) || tag != "graph")
        throw std::invalid_argument("graph file: bad header");
    std::vector<std::vector<int>> adj(n);
    for (uint64_t i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> tag >> u >> v) || tag != "edge")
            throw std::invalid_argument("graph file: bad edge line");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return std::make_shared<ExplicitGraph>(name, std::move(adj));
}

void write_pebb(std::ostream& out, const PebbInstance& inst) {
    out << "pebb M=" << inst.M() << "\n";
    uint64_t n = *inst.dag->vertex_count();
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.dag->vertex_at(i);
        for (int s = 0; s < 3; ++s)
            out << "b " << code_str(v) << " " << s << " " << int(inst.bits[i][s]) << "\n";
        out << "I " << code_str(v) << " " << int(inst.slot[i]) << "\n";
    }
}

PebbInstance read_pebb(std::istream& in) {
    std::string header;
    if (!std::getline(in, header) || header.rfind("pebb M=", 0) != 0)
        throw std::invalid_argument("pebb file: bad header");
    PebbInstance inst;
    inst.dag = std::make_shared<PebblingDag>(std::stoi(header.substr(7)));
    uint64_t n = *inst.dag->vertex_count();
    inst.bits.assign(n, {0, 0, 0});
    inst.slot.assign(n, 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::istringstream ls(line);
        std::string tag, code;
        ls >> tag >> code;
        uint64_t idx = inst.dag->index_of(parse_code(code));
        if (tag == "b") {
            int slot, bit;
            if (!(ls >> slot >> bit))
                bad_line("pebb file: bad b line", line);
            inst.bits[idx][slot] = static_cast<uint8_t>(bit);
        } else if (tag == "I") {
            int slot;
            if (!(ls >> slot))
                bad_line("pebb file: bad I line", line);
            inst.slot[idx] = static_cast<uint8_t>(slot);
        } else {
            bad_line("pebb file: unknown line", line);
        }
    }
    return inst;
}

InstanceFile read_instance(std::istream& in) {
    InstanceFile f;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "instance") {
            ls >> f.kind;
        } else if (tag == "graph") {
            std::string ref;
            ls >> ref;
            f.graph = parse_graph_ref(ref);
        } else if (tag == "W") {
            ls >> f.value_bound;
        } else if (tag == "generator") {
            ls >> f.generator >> f.seed;
        } else if (tag == "fa" || tag == "fb" || tag == "f") {
            std::string code;
            Value v;
            if (!(ls >> code >> v))
                bad_line("instance file: bad value line", line);
            uint64_t idx = f.graph->index_of(parse_code(code));
            (tag == "fa" ? f.fa : tag == "fb" ? f.fb : f.f)[idx] = v;
        } else if (tag == "valid") {
            std::string code;
            ls >> code;
            f.valid.push_back(f.graph->index_of(parse_code(code)));
        } else {
            bad_line("instance file: unknown line", line);
        }
    }
    if (!f.graph)
        throw std::invalid_argument("instance file: missing graph");
    return f;
}

namespace {

ValueFn table_fn(GraphPtr g, std::map<uint64_t, Value> table, const char* what) {
    auto t = std::make_shared<std::map<uint64_t, Value>>(std::move(table));
    std::string label = what;
    return [g, t, label](const VertexCode& v) -> Value {
        auto it = t->find(g->index_of(v));
        if (it == t->end())
            throw std::out_of_range("instance: no " + label + " value for " + code_str(v));
        return it->second;
    };
}

} // namespace

SumLSInstance instance_as_sumls(const InstanceFile& f) {
    if (f.kind != "sumls")
        throw std::invalid_argument("instance file is not a sumls instance");
    if (f.generator == "random" || f.generator == "random-distinct") {
        Rng rng = seeded_rng(f.seed);
        return random_sumls(f.graph, f.value_bound, rng, f.generator == "random-distinct");
    }
    if (!f.generator.empty())
        throw std::invalid_argument("unknown sumls generator " + f.generator);
    SumLSInstance out;
    out.graph = f.graph;
    out.f_a = table_fn(f.graph, f.fa, "fa");
    out.f_b = table_fn(f.graph, f.fb, "fb");
    out.value_bound = f.value_bound;
    return out;
}

VetoLSInstance instance_as_vetols(const InstanceFile& f) {
    if (f.kind != "vetols")
        throw std::invalid_argument("instance file is not a vetols instance");
    if (f.generator == "random") {
        Rng rng = seeded_rng(f.seed);
        return random_vetols(f.graph, f.value_bound, rng);
    }
    if (f.generator.rfind("lifted", 0) == 0) {
        auto parts = split(f.generator, ':');
        if (parts.size() != 2)
            throw std::invalid_argument("lifted generator needs lifted:<M>");
        int gadget = std::stoi(parts[1]);
        Rng rng = seeded_rng(f.seed);
        QueryInstance q = random_query(f.graph, f.value_bound, rng);
        SimLSInstance sim = simls_build(distinctify(q), gadget, f.seed ^ 0x5eedULL);
        return lift_to_vetols(sim);
    }
    if (!f.generator.empty())
        throw std::invalid_argument("unknown vetols generator " + f.generator);
    VetoLSInstance out;
    out.graph = f.graph;
    out.potential = table_fn(f.graph, f.f, "f");
    auto s = std::make_shared<std::vector<uint64_t>>(f.valid);
    std::sort(s->begin(), s->end());
    GraphPtr g = f.graph;
    out.valid = [g, s](const VertexCode& v) {
        return std::binary_search(s->begin(), s->end(), g->index_of(v));
    };
    out.value_bound = f.value_bound;
    return out;
}

QueryInstance instance_as_query(const InstanceFile& f) {
    if (f.kind != "query")
        throw std::invalid_argument("instance file is not a query instance");
    if (f.generator == "random") {
        Rng rng = seeded_rng(f.seed);
        return random_query(f.graph, f.value_bound, rng);
    }
    if (!f.generator.empty())
        throw std::invalid_argument("unknown query generator " + f.generator);
    return QueryInstance(f.graph, table_fn(f.graph, f.f, "h"));
}

namespace {

void write_instance_header(std::ostream& out, const char* kind, const Graph& g, Value w) {
    out << "instance " << kind << "\n";
    out << "graph " << g.name() << "\n";
    out << "W " << w << "\n";
}

} // namespace

void write_sumls(std::ostream& out, const SumLSInstance& inst) {
    write_instance_header(out, "sumls", *inst.graph, inst.value_bound);
    uint64_t n = *inst.graph->vertex_count();
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        out << "fa " << code_str(v) << " " << inst.f_a(v) << "\n";
    }
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        out << "fb " << code_str(v) << " " << inst.f_b(v) << "\n";
    }
}

void write_vetols(std::ostream& out, const VetoLSInstance& inst) {
    write_instance_header(out, "vetols", *inst.graph, inst.value_bound);
    uint64_t n = *inst.graph->vertex_count();
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        out << "f " << code_str(v) << " " << inst.potential(v) << "\n";
    }
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        if (inst.valid(v))
            out << "valid " << code_str(v) << "\n";
    }
}

void write_query(std::ostream& out, const QueryInstance& inst) {
    write_instance_header(out, "query", *inst.graph(), 0);
    uint64_t n = *inst.graph()->vertex_count();
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph()->vertex_at(i);
        out << "f " << code_str(v) << " " << inst.raw()(v) << "\n";
    }
}

void write_embedding(std::ostream& out, const VIEDEmbedding& emb) {
    out << "embedding " << emb.name << "\n";
    out << "source " << emb.source->name() << "\n";
    out << "target " << emb.target->name() << "\n";
    uint64_t n = *emb.source->vertex_count();
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = emb.source->vertex_at(i);
        out << "phi " << code_str(v) << " -> " << code_str(emb.phi(v)) << "\n";
    }
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = emb.source->vertex_at(i);
        for (const VertexCode& w : emb.source->neighbors(v)) {
            if (emb.source->index_of(w) <= i)
                continue;
            out << "chi " << code_str(v) << " " << code_str(w) << " :";
            bool first = true;
            for (const VertexCode& x : emb.path(v, w)) {
                out << (first ? " " : ",") << code_str(x);
                first = false;
            }
            out << "\n";
        }
    }
}

VIEDEmbedding read_embedding(std::istream& in) {
    VIEDEmbedding emb;
    auto phi_map = std::make_shared<std::map<VertexCode, VertexCode>>();
    auto path_map = std::make_shared<std::map<std::pair<VertexCode, VertexCode>, std::vector<VertexCode>>>();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "embedding") {
            ls >> emb.name;
        } else if (tag == "source" || tag == "target") {
            std::string ref;
            ls >> ref;
            (tag == "source" ? emb.source : emb.target) = parse_graph_ref(ref);
        } else if (tag == "phi") {
            std::string from, arrow, to;
            if (!(ls >> from >> arrow >> to) || arrow != "->")
                bad_line("embedding file: bad phi line", line);
            (*phi_map)[parse_code(from)] = parse_code(to);
        } else if (tag == "chi") {
            std::string u, v, colon, rest;
            if (!(ls >> u >> v >> colon) || colon != ":")
                bad_line("embedding file: bad chi line", line);
            ls >> rest;
            std::vector<VertexCode> path;
            for (const std::string& c : split(rest, ','))
                path.push_back(parse_code(c));
            (*path_map)[{parse_code(u), parse_code(v)}] = std::move(path);
        } else {
            bad_line("embedding file: unknown line", line);
        }
    }
    if (!emb.source || !emb.target)
        throw std::invalid_argument("embedding file: missing source/target");
    emb.phi = [phi_map](const VertexCode& v) -> VertexCode {
        auto it = phi_map->find(v);
        if (it == phi_map->end())
            throw std::out_of_range("embedding: phi undefined at " + code_str(v));
        return it->second;
    };
    emb.path = [path_map](const VertexCode& u, const VertexCode& v) -> std::vector<VertexCode> {
        if (auto it = path_map->find({u, v}); it != path_map->end())
            return it->second;
        if (auto it = path_map->find({v, u}); it != path_map->end()) {
            std::vector<VertexCode> rev = it->second;
            std::reverse(rev.begin(), rev.end());
            return rev;
        }
        throw std::out_of_range("embedding: no path for edge {" + code_str(u) + ", " + code_str(v) +
                                "}");
    };
    return emb;
}

void write_game2p_tables(std::ostream& out, const std::vector<std::vector<Value>>& ua,
                         const std::vector<std::vector<Value>>& ub) {
    out << "game2p " << ua.size() << " " << (ua.empty() ? 0 : ua[0].size()) << "\n";
    for (const char* tag : {"ua", "ub"}) {
        const auto& t = tag[1] == 'a' ? ua : ub;
        out << tag << "\n";
        for (const auto& row : t) {
            for (size_t j = 0; j < row.size(); ++j)
                out << (j ? " " : "") << row[j];
            out << "\n";
        }
    }
}

void read_game2p_tables(std::istream& in, std::vector<std::vector<Value>>& ua,
                        std::vector<std::vector<Value>>& ub) {
    std::string tag;
    size_t na = 0, nb = 0;
    if (!(in >> tag >> na >> nb) || tag != "game2p")
        throw std::invalid_argument("game file: bad header");
    for (int which = 0; which < 2; ++which) {
        if (!(in >> tag) || (tag != "ua" && tag != "ub"))
            throw std::invalid_argument("game file: expected ua/ub block");
        auto& t = tag == "ua" ? ua : ub;
        t.assign(na, std::vector<Value>(nb));
        for (size_t i = 0; i < na; ++i)
            for (size_t j = 0; j < nb; ++j)
                if (!(in >> t[i][j]))
                    throw std::invalid_argument("game file: short table");
    }
}

std::string report_line(const std::string& schema,
                        const std::vector<std::pair<std::string, std::string>>& fields) {
    std::string out = "schema=" + schema;
    for (const auto& [k, v] : fields)
        out += " " + k + "=" + v;
    return out;
}

} // namespace ccls
