#include "ccls/graphs.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_map>

namespace ccls {

namespace {

int bits_for(uint64_t max_value) {
    int b = std::bit_width(max_value);
    return b == 0 ? 1 : b;
}

uint64_t binom(int n, int r) {
    if (r < 0 || r > n)
        return 0;
    r = std::min(r, n - r);
    uint64_t out = 1;
    for (int i = 1; i <= r; ++i)
        out = out * static_cast<uint64_t>(n - r + i) / i;
    return out;
}

} // namespace

VertexCode Graph::vertex_at(uint64_t) const {
    throw std::logic_error(name() + " is not enumerable");
}

uint64_t Graph::index_of(const VertexCode&) const {
    throw std::logic_error(name() + " is not enumerable");
}

bool Graph::adjacent(const VertexCode& u, const VertexCode& v) const {
    for (const VertexCode& w : neighbors(u))
        if (w == v)
            return true;
    return false;
}

// ---------------------------------------------------------------- Hypercube

Hypercube::Hypercube(int n) : n_(n) {
    if (n < 1 || n > 384)
        throw std::invalid_argument("Hypercube: dimension out of range");
}

std::string Hypercube::name() const { return "hyp:" + std::to_string(n_); }

bool Hypercube::contains(const VertexCode& v) const {
    if (v.size() != static_cast<size_t>(n_))
        return false;
    for (int b : v)
        if (b != 0 && b != 1)
            return false;
    return true;
}

std::vector<VertexCode> Hypercube::neighbors(const VertexCode& v) const {
    require(v);
    std::vector<VertexCode> out;
    out.reserve(n_);
    for (int b = 0; b < n_; ++b) {
        VertexCode w = v;
        w[b] ^= 1;
        out.push_back(std::move(w));
    }
    return out;
}

std::optional<uint64_t> Hypercube::vertex_count() const {
    if (n_ >= 64)
        return std::nullopt;
    return 1ull << n_;
}

VertexCode Hypercube::vertex_at(uint64_t idx) const {
    if (n_ >= 64 || idx >= (1ull << n_))
        throw std::out_of_range("Hypercube::vertex_at");
    VertexCode c(n_);
    for (int b = 0; b < n_; ++b)
        c[b] = static_cast<int>((idx >> b) & 1);
    return c;
}

uint64_t Hypercube::index_of(const VertexCode& v) const {
    require(v);
    if (n_ >= 64)
        throw std::logic_error("Hypercube too large to index");
    uint64_t idx = 0;
    for (int b = 0; b < n_; ++b)
        idx |= static_cast<uint64_t>(v[b]) << b;
    return idx;
}

bool Hypercube::adjacent(const VertexCode& u, const VertexCode& v) const {
    return analytic_distance(u, v) == 1;
}

std::optional<Value> Hypercube::analytic_distance(const VertexCode& u, const VertexCode& v) const {
    require(u);
    require(v);
    Value d = 0;
    for (int b = 0; b < n_; ++b)
        d += u[b] != v[b];
    return d;
}

CodeLayout Hypercube::layout() const { return CodeLayout(std::vector<int>(n_, 1)); }

// --------------------------------------------------------------------- Grid

Grid::Grid(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw std::invalid_argument("Grid: no axes");
    for (int d : dims_)
        if (d < 1)
            throw std::invalid_argument("Grid: axis of size < 1");
}

std::string Grid::name() const {
    std::string s = "grid:";
    for (size_t i = 0; i < dims_.size(); ++i) {
        if (i)
            s += 'x';
        s += std::to_string(dims_[i]);
    }
    return s;
}

bool Grid::contains(const VertexCode& v) const {
    if (v.size() != dims_.size())
        return false;
    for (size_t i = 0; i < dims_.size(); ++i)
        if (v[i] < 0 || v[i] >= dims_[i])
            return false;
    return true;
}

std::vector<VertexCode> Grid::neighbors(const VertexCode& v) const {
    require(v);
    std::vector<VertexCode> out;
    for (size_t i = 0; i < dims_.size(); ++i) {
        for (int d : {-1, 1}) {
            int x = v[i] + d;
            if (x < 0 || x >= dims_[i])
                continue;
            VertexCode w = v;
            w[i] = x;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::optional<uint64_t> Grid::vertex_count() const {
    uint64_t n = 1;
    for (int d : dims_) {
        if (n > UINT64_MAX / static_cast<uint64_t>(d))
            return std::nullopt;
        n *= static_cast<uint64_t>(d);
    }
    return n;
}

VertexCode Grid::vertex_at(uint64_t idx) const {
    auto n = vertex_count();
    if (!n || idx >= *n)
        throw std::out_of_range("Grid::vertex_at");
    VertexCode c(dims_.size());
    for (size_t i = dims_.size(); i-- > 0;) {
        c[i] = static_cast<int>(idx % dims_[i]);
        idx /= dims_[i];
    }
    return c;
}

uint64_t Grid::index_of(const VertexCode& v) const {
    require(v);
    if (!vertex_count())
        throw std::logic_error("Grid too large to index");
    uint64_t idx = 0;
    for (size_t i = 0; i < dims_.size(); ++i)
        idx = idx * dims_[i] + static_cast<uint64_t>(v[i]);
    return idx;
}

bool Grid::adjacent(const VertexCode& u, const VertexCode& v) const {
    return analytic_distance(u, v) == 1;
}

std::optional<Value> Grid::analytic_distance(const VertexCode& u, const VertexCode& v) const {
    require(u);
    require(v);
    Value d = 0;
    for (size_t i = 0; i < dims_.size(); ++i)
        d += std::abs(u[i] - v[i]);
    return d;
}

CodeLayout Grid::layout() const {
    std::vector<int> bits;
    bits.reserve(dims_.size());
    for (int d : dims_)
        bits.push_back(bits_for(static_cast<uint64_t>(d - 1)));
    return CodeLayout(std::move(bits));
}

// ----------------------------------------------------------------- OddGraph

OddGraph::OddGraph(int k) : k_(k) {
    if (k < 2 || k > 16)
        throw std::invalid_argument("OddGraph: k out of range");
}

std::string OddGraph::name() const { return "odd:" + std::to_string(k_); }

bool OddGraph::contains(const VertexCode& v) const {
    if (v.size() != 1 || v[0] < 0)
        return false;
    uint32_t mask = static_cast<uint32_t>(v[0]);
    return mask < (1u << ground_size()) && std::popcount(mask) == k_ - 1;
}

std::vector<VertexCode> OddGraph::neighbors(const VertexCode& v) const {
    require(v);
    // Complement has k elements; the disjoint (k-1)-subsets are exactly the
    // complement minus one element.
    uint32_t comp = ~static_cast<uint32_t>(v[0]) & ((1u << ground_size()) - 1);
    std::vector<VertexCode> out;
    out.reserve(k_);
    uint32_t rest = comp;
    while (rest) {
        uint32_t bit = rest & (~rest + 1);
        out.push_back({static_cast<int>(comp & ~bit)});
        rest &= rest - 1;
    }
    return out;
}

std::optional<uint64_t> OddGraph::vertex_count() const { return binom(ground_size(), k_ - 1); }

VertexCode OddGraph::vertex_at(uint64_t idx) const {
    // Colex unranking of (k-1)-subsets of the ground set.
    uint64_t n = *vertex_count();
    if (idx >= n)
        throw std::out_of_range("OddGraph::vertex_at");
    uint32_t mask = 0;
    for (int i = k_ - 1; i >= 1; --i) {
        int e = i - 1;
        while (binom(e + 1, i) <= idx)
            ++e;
        mask |= 1u << e;
        idx -= binom(e, i);
    }
    return {static_cast<int>(mask)};
}

uint64_t OddGraph::index_of(const VertexCode& v) const {
    require(v);
    uint64_t idx = 0;
    int seen = 0;
    uint32_t mask = static_cast<uint32_t>(v[0]);
    while (mask) {
        int e = std::countr_zero(mask);
        idx += binom(e, ++seen);
        mask &= mask - 1;
    }
    return idx;
}

bool OddGraph::adjacent(const VertexCode& u, const VertexCode& v) const {
    require(u);
    require(v);
    return (static_cast<uint32_t>(u[0]) & static_cast<uint32_t>(v[0])) == 0;
}

CodeLayout OddGraph::layout() const { return CodeLayout({ground_size()}); }

// -------------------------------------------------------------- PebblingDag

PebblingDag::PebblingDag(int M) : M_(M) {
    if (M < 3)
        throw std::invalid_argument("PebblingDag: M >= 3 required (smaller M collapses +1/-1 mod M)");
    if (M > 1000)
        throw std::invalid_argument("PebblingDag: M too large");
}

std::string PebblingDag::name() const { return "pebb-dag:" + std::to_string(M_); }

bool PebblingDag::contains(const VertexCode& v) const {
    if (v.size() != 4)
        return false;
    if (v[0] < 0 || static_cast<uint64_t>(v[0]) >= layers())
        return false;
    for (int i = 1; i < 4; ++i)
        if (v[i] < 0 || v[i] >= M_)
            return false;
    return true;
}

std::vector<VertexCode> PebblingDag::successors(const VertexCode& v) const {
    require(v);
    std::vector<VertexCode> out;
    if (is_sink(v))
        return out;
    out.reserve(6);
    for (int axis = 1; axis <= 3; ++axis) {
        for (int d : {1, M_ - 1}) {
            VertexCode w = v;
            w[0] += 1;
            w[axis] = (w[axis] + d) % M_;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<VertexCode> PebblingDag::predecessors(const VertexCode& v) const {
    require(v);
    std::vector<VertexCode> out;
    if (is_source(v))
        return out;
    out.reserve(6);
    for (int axis = 1; axis <= 3; ++axis) {
        for (int d : {1, M_ - 1}) {
            VertexCode w = v;
            w[0] -= 1;
            w[axis] = (w[axis] + d) % M_;
            out.push_back(std::move(w));
        }
    }
    return out;
}

std::vector<VertexCode> PebblingDag::neighbors(const VertexCode& v) const {
    std::vector<VertexCode> out = successors(v);
    std::vector<VertexCode> pred = predecessors(v);
    out.insert(out.end(), pred.begin(), pred.end());
    return out;
}

std::optional<uint64_t> PebblingDag::vertex_count() const {
    return layers() * static_cast<uint64_t>(M_) * M_ * M_;
}

VertexCode PebblingDag::vertex_at(uint64_t idx) const {
    if (idx >= *vertex_count())
        throw std::out_of_range("PebblingDag::vertex_at");
    VertexCode c(4);
    c[3] = static_cast<int>(idx % M_);
    idx /= M_;
    c[2] = static_cast<int>(idx % M_);
    idx /= M_;
    c[1] = static_cast<int>(idx % M_);
    idx /= M_;
    c[0] = static_cast<int>(idx);
    return c;
}

uint64_t PebblingDag::index_of(const VertexCode& v) const {
    require(v);
    return ((static_cast<uint64_t>(v[0]) * M_ + v[1]) * M_ + v[2]) * M_ + v[3];
}

CodeLayout PebblingDag::layout() const {
    int mb = bits_for(static_cast<uint64_t>(M_ - 1));
    return CodeLayout({bits_for(layers() - 1), mb, mb, mb});
}

// --------------------------------------------------------- ReplicationGraph

ReplicationGraph::ReplicationGraph(int M) : M_(M) {
    if (M < 3)
        throw std::invalid_argument("ReplicationGraph: M >= 3 required");
    if (M > 100)
        throw std::invalid_argument("ReplicationGraph: M too large");
}

std::string ReplicationGraph::name() const { return "replication:" + std::to_string(M_); }

bool ReplicationGraph::contains(const VertexCode& v) const {
    if (v.size() != 5)
        return false;
    if (v[0] < 0 || static_cast<uint64_t>(v[0]) >= layers())
        return false;
    for (int i = 1; i < 4; ++i)
        if (v[i] < 0 || v[i] >= M_)
            return false;
    return v[4] >= 0 && v[4] < 3;
}

std::vector<VertexCode> ReplicationGraph::neighbors(const VertexCode& v) const {
    require(v);
    int L = static_cast<int>(layers());
    std::vector<VertexCode> out;
    out.reserve(36);
    for (int ld : {1, L - 1}) {
        for (int axis = 1; axis <= 3; ++axis) {
            for (int d : {1, M_ - 1}) {
                for (int j = 0; j < 3; ++j) {
                    VertexCode w = v;
                    w[0] = (w[0] + ld) % L;
                    w[axis] = (w[axis] + d) % M_;
                    w[4] = j;
                    out.push_back(std::move(w));
                }
            }
        }
    }
    return out;
}

std::optional<uint64_t> ReplicationGraph::vertex_count() const {
    return 3 * layers() * static_cast<uint64_t>(M_) * M_ * M_;
}

VertexCode ReplicationGraph::vertex_at(uint64_t idx) const {
    if (idx >= *vertex_count())
        throw std::out_of_range("ReplicationGraph::vertex_at");
    VertexCode c(5);
    c[4] = static_cast<int>(idx % 3);
    idx /= 3;
    c[3] = static_cast<int>(idx % M_);
    idx /= M_;
    c[2] = static_cast<int>(idx % M_);
    idx /= M_;
    c[1] = static_cast<int>(idx % M_);
    idx /= M_;
    c[0] = static_cast<int>(idx);
    return c;
}

uint64_t ReplicationGraph::index_of(const VertexCode& v) const {
    require(v);
    return (((static_cast<uint64_t>(v[0]) * M_ + v[1]) * M_ + v[2]) * M_ + v[3]) * 3 + v[4];
}

bool ReplicationGraph::adjacent(const VertexCode& u, const VertexCode& v) const {
    require(u);
    require(v);
    int L = static_cast<int>(layers());
    int ld = ((v[0] - u[0]) % L + L) % L;
    if (ld != 1 && ld != L - 1)
        return false;
    int changed = 0;
    for (int axis = 1; axis <= 3; ++axis) {
        int d = ((v[axis] - u[axis]) % M_ + M_) % M_;
        if (d == 0)
            continue;
        if (d != 1 && d != M_ - 1)
            return false;
        ++changed;
    }
    return changed == 1;
}

CodeLayout ReplicationGraph::layout() const {
    int mb = bits_for(static_cast<uint64_t>(M_ - 1));
    return CodeLayout({bits_for(layers() - 1), mb, mb, mb, 2});
}

// ------------------------------------------------------------ ExplicitGraph

ExplicitGraph::ExplicitGraph(std::string name, std::vector<std::vector<int>> adj)
    : name_(std::move(name)), adj_(std::move(adj)) {
    int n = static_cast<int>(adj_.size());
    for (int u = 0; u < n; ++u) {
        std::sort(adj_[u].begin(), adj_[u].end());
        for (size_t i = 0; i < adj_[u].size(); ++i) {
            int v = adj_[u][i];
            if (v < 0 || v >= n || v == u)
                throw std::invalid_argument("ExplicitGraph: bad adjacency entry");
            if (i > 0 && adj_[u][i - 1] == v)
                throw std::invalid_argument("ExplicitGraph: duplicate edge");
        }
        max_degree_ = std::max(max_degree_, static_cast<int>(adj_[u].size()));
    }
    for (int u = 0; u < n; ++u)
        for (int v : adj_[u])
            if (!std::binary_search(adj_[v].begin(), adj_[v].end(), u))
                throw std::invalid_argument("ExplicitGraph: asymmetric adjacency");
}

bool ExplicitGraph::contains(const VertexCode& v) const {
    return v.size() == 1 && v[0] >= 0 && static_cast<size_t>(v[0]) < adj_.size();
}

std::vector<VertexCode> ExplicitGraph::neighbors(const VertexCode& v) const {
    require(v);
    std::vector<VertexCode> out;
    out.reserve(adj_[v[0]].size());
    for (int w : adj_[v[0]])
        out.push_back({w});
    return out;
}

VertexCode ExplicitGraph::vertex_at(uint64_t idx) const {
    if (idx >= adj_.size())
        throw std::out_of_range("ExplicitGraph::vertex_at");
    return {static_cast<int>(idx)};
}

uint64_t ExplicitGraph::index_of(const VertexCode& v) const {
    require(v);
    return static_cast<uint64_t>(v[0]);
}

CodeLayout ExplicitGraph::layout() const {
    return CodeLayout({bits_for(adj_.empty() ? 0 : adj_.size() - 1)});
}

std::shared_ptr<ExplicitGraph> complete_graph(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v)
                adj[u].push_back(v);
    return std::make_shared<ExplicitGraph>("k" + std::to_string(n), std::move(adj));
}

std::shared_ptr<ExplicitGraph> cycle_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("cycle_graph: n >= 3");
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u < n; ++u) {
        adj[u].push_back((u + 1) % n);
        adj[u].push_back((u + n - 1) % n);
    }
    return std::make_shared<ExplicitGraph>("cycle" + std::to_string(n), std::move(adj));
}

std::shared_ptr<ExplicitGraph> path_graph(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int u = 0; u + 1 < n; ++u) {
        adj[u].push_back(u + 1);
        adj[u + 1].push_back(u);
    }
    return std::make_shared<ExplicitGraph>("path" + std::to_string(n), std::move(adj));
}

std::shared_ptr<ExplicitGraph> random_regular_graph(int n, int degree, Rng& rng) {
    if (n * degree % 2 != 0)
        throw std::invalid_argument("random_regular_graph: n*degree must be even");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs;
        stubs.reserve(static_cast<size_t>(n) * degree);
        for (int v = 0; v < n; ++v)
            for (int d = 0; d < degree; ++d)
                stubs.push_back(v);
        for (size_t i = stubs.size(); i > 1; --i)
            std::swap(stubs[i - 1], stubs[rng.below(i)]);
        std::vector<std::vector<int>> adj(n);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
                ok = false;
            else {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        }
        if (ok) {
            // accept connected samples only
            std::vector<int> seen(n, 0);
            std::deque<int> q{0};
            seen[0] = 1;
            int reached = 1;
            while (!q.empty()) {
                int u = q.front();
                q.pop_front();
                for (int v : adj[u])
                    if (!seen[v]) {
                        seen[v] = 1;
                        ++reached;
                        q.push_back(v);
                    }
            }
            if (reached == n)
                return std::make_shared<ExplicitGraph>("rand" + std::to_string(degree) + "reg" +
                                                           std::to_string(n),
                                                       std::move(adj));
        }
    }
    throw std::runtime_error("random_regular_graph: pairing model failed to converge");
}

std::shared_ptr<ExplicitGraph> random_bounded_degree_graph(int n, int m, int degree_cap, Rng& rng) {
    std::vector<std::vector<int>> adj(n);
    int placed = 0, attempts = 0;
    while (placed < m && attempts < 50 * m + 1000) {
        ++attempts;
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v)
            continue;
        if (static_cast<int>(adj[u].size()) >= degree_cap || static_cast<int>(adj[v].size()) >= degree_cap)
            continue;
        if (std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end())
            continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
        ++placed;
    }
    return std::make_shared<ExplicitGraph>("randdeg" + std::to_string(degree_cap) + "n" +
                                               std::to_string(n),
                                           std::move(adj));
}

// ------------------------------------------------------------------ queries

std::optional<Value> graph_distance(const Graph& g, const VertexCode& u, const VertexCode& v,
                                    size_t cap) {
    if (auto d = g.analytic_distance(u, v))
        return d;
    g.require(u);
    g.require(v);
    if (u == v)
        return 0;
    CodeLayout lay = g.layout();
    std::unordered_map<PackedCode, Value, PackedCodeHash> dist;
    std::deque<VertexCode> q;
    dist[lay.pack(u)] = 0;
    q.push_back(u);
    PackedCode target = lay.pack(v);
    while (!q.empty()) {
        VertexCode cur = std::move(q.front());
        q.pop_front();
        Value d = dist[lay.pack(cur)];
        for (VertexCode& w : g.neighbors(cur)) {
            PackedCode key = lay.pack(w);
            if (dist.count(key))
                continue;
            if (key == target)
                return d + 1;
            dist[key] = d + 1;
            if (dist.size() > cap)
                throw std::length_error("graph_distance: BFS cap exceeded on " + g.name());
            q.push_back(std::move(w));
        }
    }
    return std::nullopt;
}

int edge_color(const ReplicationGraph& g, const VertexCode& u, const VertexCode& v) {
    if (g.M() % 2 != 0)
        throw std::invalid_argument("edge_color: defined for even M only (odd layer count cannot "
                                    "2-color the cyclic layer structure)");
    if (!g.adjacent(u, v))
        throw std::invalid_argument("edge_color: not an edge");
    int L = static_cast<int>(g.layers());
    // Canonical direction: from the lower layer along the cyclic order.
    const VertexCode* s = &u;
    const VertexCode* t = &v;
    if ((u[0] + 1) % L != v[0])
        std::swap(s, t);
    int axis = -1, sign = 0;
    for (int a = 1; a <= 3; ++a) {
        int d = (((*t)[a] - (*s)[a]) % g.M() + g.M()) % g.M();
        if (d == 1) {
            axis = a;
            sign = 0;
        } else if (d == g.M() - 1) {
            axis = a;
            sign = 1;
        }
    }
    int parity_class = (*s)[0] % 2;
    int displacement = 2 * (axis - 1) + sign;
    return parity_class * 54 + displacement * 9 + (*s)[4] * 3 + (*t)[4];
}

} // namespace ccls
