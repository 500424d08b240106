#include "ccls/game2p.hpp"

#include <stdexcept>

namespace ccls {

Game2P::Game2P(const SumLSInstance& inst, bool pad_degree) {
    auto count = inst.graph->vertex_count();
    if (!count || *count > 4096)
        throw std::length_error("Game2P: graph too large, actions are N*W^5");
    n_ = static_cast<int>(*count);
    w_ = inst.value_bound;
    if (w_ < 1 || w_ > 20)
        throw std::invalid_argument("Game2P: W out of the enumerable range");

    fa_.resize(n_);
    fb_.resize(n_);
    nbr_.resize(n_);
    for (int v = 0; v < n_; ++v) {
        VertexCode code = inst.graph->vertex_at(v);
        fa_[v] = inst.f_a(code);
        fb_[v] = inst.f_b(code);
        if (fa_[v] < 1 || fa_[v] > w_ || fb_[v] < 1 || fb_[v] > w_)
            throw std::invalid_argument("Game2P: potentials must lie in [1, W]");
        auto nbrs = inst.graph->neighbors(code);
        if (nbrs.size() > 4)
            throw std::invalid_argument("Game2P: graph has degree > 4");
        if (nbrs.size() < 4 && !pad_degree)
            throw std::invalid_argument("Game2P: graph is not 4-regular");
        for (int i = 0; i < 4; ++i)
            nbr_[v][i] = i < static_cast<int>(nbrs.size())
                             ? static_cast<int>(inst.graph->index_of(nbrs[i]))
                             : v;
    }

    // Adjacent sums must differ, otherwise two neighboring local maxima of
    // the sum yield non-truthful equilibria.
    for (int v = 0; v < n_; ++v)
        for (int i = 0; i < 4; ++i) {
            int u = nbr_[v][i];
            if (u != v && fa_[u] + fb_[u] == fa_[v] + fb_[v])
                throw std::invalid_argument("Game2P: adjacent vertices share a sum value");
        }

    slot_.assign(static_cast<size_t>(n_) * n_, -1);
    adj_.assign(static_cast<size_t>(n_) * n_, 0);
    for (int v = 0; v < n_; ++v) {
        slot_[static_cast<size_t>(v) * n_ + v] = 0;
        adj_[static_cast<size_t>(v) * n_ + v] = 1;
        for (int i = 0; i < 4; ++i) {
            int u = nbr_[v][i];
            adj_[static_cast<size_t>(v) * n_ + u] = 1;
            int8_t& s = slot_[static_cast<size_t>(v) * n_ + u];
            if (u != v && s < 0)
                s = static_cast<int8_t>(i + 1);
        }
    }

    uint64_t w5 = 1;
    for (int i = 0; i < 5; ++i)
        w5 *= static_cast<uint64_t>(w_);
    action_count_ = static_cast<uint64_t>(n_) * w5;
    if (action_count_ > (1ull << 26))
        throw std::length_error("Game2P: action space too large to precompute");

    act_vertex_.resize(action_count_);
    act_digits_.resize(action_count_);
    truth_a_.assign(action_count_, 0);
    truth_b_.assign(action_count_, 0);
    for (uint64_t a = 0; a < action_count_; ++a) {
        uint64_t rest = a;
        for (int d = 4; d >= 0; --d) {
            act_digits_[a][d] = static_cast<int8_t>(rest % w_);
            rest /= w_;
        }
        act_vertex_[a] = static_cast<int>(rest);
    }
    for (int v = 0; v < n_; ++v) {
        truth_a_[truthful_action_alice(v)] = 1;
        truth_b_[truthful_action_bob(v)] = 1;
    }

    ValueFn sum = [&inst](const VertexCode& c) { return inst.sum(c); };
    for (int v = 0; v < n_; ++v) {
        VertexCode code = inst.graph->vertex_at(v);
        if (is_local_max(*inst.graph, sum, code))
            local_max_vertices_.push_back(v);
    }
}

uint64_t Game2P::encode(int v, const std::array<Value, 5>& report) const {
    uint64_t a = static_cast<uint64_t>(v);
    for (int d = 0; d < 5; ++d) {
        if (report[d] < 1 || report[d] > w_)
            throw std::out_of_range("Game2P::encode: report value outside [1, W]");
        a = a * w_ + static_cast<uint64_t>(report[d] - 1);
    }
    return a;
}

std::array<Value, 5> Game2P::action_report(uint64_t a) const {
    std::array<Value, 5> r;
    for (int d = 0; d < 5; ++d)
        r[d] = act_digits_[a][d] + 1;
    return r;
}

uint64_t Game2P::truthful_action_alice(int v) const {
    return encode(v, {fa_[v], fa_[nbr_[v][0]], fa_[nbr_[v][1]], fa_[nbr_[v][2]], fa_[nbr_[v][3]]});
}

uint64_t Game2P::truthful_action_bob(int v) const {
    return encode(v, {fb_[v], fb_[nbr_[v][0]], fb_[nbr_[v][1]], fb_[nbr_[v][2]], fb_[nbr_[v][3]]});
}

Value Game2P::report_value_at(uint64_t action, int at_vertex) const {
    int8_t s = slot_[static_cast<size_t>(act_vertex_[action]) * n_ + at_vertex];
    return s < 0 ? 0 : act_digits_[action][s] + 1;
}

Value Game2P::u_alice(uint64_t a, uint64_t b) const {
    int v = act_vertex_[a], w = act_vertex_[b];
    Value out = 0;
    if (adj_[static_cast<size_t>(v) * n_ + w])
        out += 4 * w_;
    if (truth_a_[a])
        out += 4 * w_;
    out += report_value_at(b, v) + report_value_at(a, w) + fa_[v];
    return out;
}

Value Game2P::u_bob(uint64_t a, uint64_t b) const {
    int v = act_vertex_[a], w = act_vertex_[b];
    Value out = 0;
    if (adj_[static_cast<size_t>(v) * n_ + w])
        out += 4 * w_;
    if (truth_b_[b])
        out += 4 * w_;
    out += report_value_at(b, v) + report_value_at(a, w) + fb_[w];
    return out;
}

Value Game2P::phi(uint64_t a, uint64_t b) const {
    int v = act_vertex_[a], w = act_vertex_[b];
    Value out = 0;
    if (adj_[static_cast<size_t>(v) * n_ + w])
        out += 4 * w_;
    if (truth_a_[a])
        out += 4 * w_;
    if (truth_b_[b])
        out += 4 * w_;
    out += report_value_at(b, v) + report_value_at(a, w) + fa_[v] + fb_[w];
    return out;
}

uint64_t Game2P::identity_scan() const {
    // u_i - phi may depend on the opponent's action only; scanning each
    // line for constancy covers every unilateral deviation pair.
    uint64_t checks = 0;
    for (uint64_t b = 0; b < action_count_; ++b) {
        Value base = u_alice(0, b) - phi(0, b);
        for (uint64_t a = 0; a < action_count_; ++a, ++checks)
            if (u_alice(a, b) - phi(a, b) != base)
                throw std::logic_error("Game2P: exact-potential identity fails for Alice");
    }
    for (uint64_t a = 0; a < action_count_; ++a) {
        Value base = u_bob(a, 0) - phi(a, 0);
        for (uint64_t b = 0; b < action_count_; ++b, ++checks)
            if (u_bob(a, b) - phi(a, b) != base)
                throw std::logic_error("Game2P: exact-potential identity fails for Bob");
    }
    return checks;
}

std::vector<std::pair<uint64_t, uint64_t>> Game2P::nash_set() const {
    std::vector<Value> best_a(action_count_, INT64_MIN); // max over Alice for fixed Bob
    std::vector<Value> best_b(action_count_, INT64_MIN); // max over Bob for fixed Alice
    for (uint64_t a = 0; a < action_count_; ++a)
        for (uint64_t b = 0; b < action_count_; ++b) {
            Value ua = u_alice(a, b);
            if (ua > best_a[b])
                best_a[b] = ua;
            Value ub = u_bob(a, b);
            if (ub > best_b[a])
                best_b[a] = ub;
        }
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (uint64_t a = 0; a < action_count_; ++a)
        for (uint64_t b = 0; b < action_count_; ++b)
            if (u_alice(a, b) == best_a[b] && u_bob(a, b) == best_b[a])
                out.emplace_back(a, b);
    return out;
}

std::vector<std::pair<uint64_t, uint64_t>> Game2P::predicted_nash_set() const {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (int v : local_max_vertices_)
        out.emplace_back(truthful_action_alice(v), truthful_action_bob(v));
    std::sort(out.begin(), out.end());
    return out;
}

Game Game2P::as_game() const {
    auto self = std::make_shared<Game2P>(*this);
    Game g;
    g.players = 2;
    g.actions = {static_cast<int>(action_count_), static_cast<int>(action_count_)};
    g.utility = [self](int player, const Profile& p) {
        uint64_t a = static_cast<uint64_t>(p[0]), b = static_cast<uint64_t>(p[1]);
        return player == 0 ? self->u_alice(a, b) : self->u_bob(a, b);
    };
    g.potential = [self](const Profile& p) {
        return self->phi(static_cast<uint64_t>(p[0]), static_cast<uint64_t>(p[1]));
    };
    return g;
}

Game2P build_game_2p(const SumLSInstance& inst, bool pad_degree) {
    return Game2P(inst, pad_degree);
}

} // namespace ccls
