#include "ccls/gamenp.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ccls {

namespace {

constexpr Value kUnreached = INT64_MAX / 4;

inline int hamming(uint32_t a, uint32_t b) { return std::popcount(a ^ b); }

} // namespace

GameNP::GameNP(const SumLSInstance& inst) {
    auto cube = std::dynamic_pointer_cast<const Hypercube>(inst.graph);
    if (!cube)
        throw std::invalid_argument("GameNP: instance must live on a hypercube");
    n_ = cube->dim();
    if (n_ < 2 || n_ > 5)
        throw std::invalid_argument("GameNP: n in [2,5] supported (exact ball-2 matching is 2^m)");
    w_ = inst.value_bound;
    if (w_ < 2)
        throw std::invalid_argument("GameNP: W >= 2 required");
    b_ = std::max(1, static_cast<int>(std::bit_width(static_cast<uint32_t>(w_ - 1))));
    m_ = 1 + n_ + n_ * (n_ - 1) / 2;

    Value nb = static_cast<Value>(n_) * b_;
    k_[5] = 1;                                   // k6
    k_[4] = 2 * n_ * n_ * b_;                    // k5
    k_[3] = 2 * n_ * n_ * n_ * b_;               // k4
    k_[2] = 8 * w_ * n_ * n_ * n_ * b_;          // k3
    k_[1] = 8 * w_ * n_ * n_ * n_ * n_ * n_ * b_ * b_; // k2
    k_[0] = k_[1] * n_ * n_ * n_;                // k1 = 8*W*n^8*b^2
    (void)nb;

    uint32_t size = 1u << n_;
    fa_.resize(size);
    fb_.resize(size);
    for (uint32_t v = 0; v < size; ++v) {
        VertexCode code = cube->vertex_at(v);
        fa_[v] = inst.f_a(code);
        fb_[v] = inst.f_b(code);
        if (fa_[v] < 1 || fa_[v] > w_ || fb_[v] < 1 || fb_[v] > w_)
            throw std::invalid_argument("GameNP: potentials must lie in [1, W]");
    }
    for (uint32_t v = 0; v < size; ++v)
        for (int i = 0; i < n_; ++i) {
            uint32_t u = v ^ (1u << i);
            if (fa_[u] + fb_[u] == fa_[v] + fb_[v])
                throw std::invalid_argument("GameNP: adjacent vertices share a sum value");
        }

    ball1_.resize(size);
    ball2_.resize(size);
    for (uint32_t v = 0; v < size; ++v) {
        for (uint32_t u = 0; u < size; ++u) {
            int d = hamming(u, v);
            if (d <= 1)
                ball1_[v].push_back(u);
            if (d <= 2)
                ball2_[v].push_back(u);
        }
    }
}

Value GameNP::dist_to_cover(const std::vector<uint32_t>& list,
                            const std::vector<uint32_t>& targets) const {
    // Cheapest way to edit some slots so the list covers all targets:
    // min-cost injective assignment of targets to slots, unused slots free.
    const size_t t = targets.size();
    std::vector<Value> dp(1u << t, kUnreached);
    dp[0] = 0;
    for (uint32_t entry : list) {
        std::vector<Value> ndp = dp;
        for (uint32_t mask = 0; mask < (1u << t); ++mask) {
            if (dp[mask] >= kUnreached)
                continue;
            for (size_t j = 0; j < t; ++j) {
                if (mask & (1u << j))
                    continue;
                Value cost = dp[mask] + hamming(entry, targets[j]);
                uint32_t nm = mask | (1u << j);
                if (cost < ndp[nm])
                    ndp[nm] = cost;
            }
        }
        dp = std::move(ndp);
    }
    return dp.back();
}

Value GameNP::dist_to_exact(const std::vector<uint32_t>& list,
                            const std::vector<uint32_t>& targets) const {
    // Perfect matching: slot i takes the target chosen at step i.
    const size_t t = targets.size();
    std::vector<Value> dp(1u << t, kUnreached);
    dp[0] = 0;
    for (uint32_t mask = 1; mask < (1u << t); ++mask) {
        size_t slot = static_cast<size_t>(std::popcount(mask)) - 1;
        for (size_t j = 0; j < t; ++j) {
            if (!(mask & (1u << j)))
                continue;
            Value prev = dp[mask ^ (1u << j)];
            if (prev >= kUnreached)
                continue;
            Value cost = prev + hamming(list[slot], targets[j]);
            if (cost < dp[mask])
                dp[mask] = cost;
        }
    }
    return dp.back();
}

Value GameNP::val_at(const std::vector<uint32_t>& ov, const std::vector<uint32_t>& of,
                     uint32_t at) const {
    for (int i = 0; i < m_; ++i)
        if (ov[i] == at) // first occurrence is a first appearance
            return std::min<Value>(of[i] + 1, w_);
    return 0;
}

Value GameNP::ball1_value_penalty(uint32_t v, const std::vector<uint32_t>& ov,
                                  const std::vector<uint32_t>& of,
                                  const std::vector<Value>& f) const {
    Value out = 0;
    for (int i = 0; i < m_; ++i) {
        bool first = true;
        for (int j = 0; j < i && first; ++j)
            first = ov[j] != ov[i];
        if (!first || hamming(ov[i], v) > 1)
            continue;
        out += std::popcount(of[i] ^ static_cast<uint32_t>(f[ov[i]] - 1));
    }
    return out;
}

Value GameNP::all_value_penalty(const std::vector<uint32_t>& ov, const std::vector<uint32_t>& of,
                                const std::vector<Value>& f) const {
    Value out = 0;
    for (int i = 0; i < m_; ++i)
        out += std::popcount(of[i] ^ static_cast<uint32_t>(f[ov[i]] - 1));
    return out;
}

Value GameNP::shared_report_terms(const Grouped& p) const {
    return val_at(p.yw, p.yf, p.v) + val_at(p.xv, p.xf, p.w);
}

Value GameNP::u_alice(const Grouped& p) const {
    Value d = hamming(p.v, p.w);
    Value out = 0;
    if (d >= 2)
        out -= k_[0] * d;
    out -= k_[1] * dist_to_cover(p.xv, ball1_[p.v]);
    out -= k_[2] * ball1_value_penalty(p.v, p.xv, p.xf, fa_);
    out += k_[3] * (shared_report_terms(p) + fa_[p.v]);
    out -= k_[4] * dist_to_exact(p.xv, ball2_[p.v]);
    out -= k_[5] * all_value_penalty(p.xv, p.xf, fa_);
    return out;
}

Value GameNP::u_bob(const Grouped& p) const {
    Value d = hamming(p.v, p.w);
    Value out = 0;
    if (d >= 2)
        out -= k_[0] * d;
    out -= k_[1] * dist_to_cover(p.yw, ball1_[p.w]);
    out -= k_[2] * ball1_value_penalty(p.w, p.yw, p.yf, fb_);
    out += k_[3] * (shared_report_terms(p) + fb_[p.w]);
    out -= k_[4] * dist_to_exact(p.yw, ball2_[p.w]);
    out -= k_[5] * all_value_penalty(p.yw, p.yf, fb_);
    return out;
}

Value GameNP::u_player(int player, const Grouped& p) const {
    return player < players() / 2 ? u_alice(p) : u_bob(p);
}

Value GameNP::phi(const Grouped& p) const {
    Value d = hamming(p.v, p.w);
    Value out = 0;
    if (d >= 2)
        out -= k_[0] * d;
    out -= k_[1] * (dist_to_cover(p.xv, ball1_[p.v]) + dist_to_cover(p.yw, ball1_[p.w]));
    out -= k_[2] * (ball1_value_penalty(p.v, p.xv, p.xf, fa_) +
                    ball1_value_penalty(p.w, p.yw, p.yf, fb_));
    out += k_[3] * (shared_report_terms(p) + fa_[p.v] + fb_[p.w]);
    out -= k_[4] * (dist_to_exact(p.xv, ball2_[p.v]) + dist_to_exact(p.yw, ball2_[p.w]));
    out -= k_[5] * (all_value_penalty(p.xv, p.xf, fa_) + all_value_penalty(p.yw, p.yf, fb_));
    return out;
}

void GameNP::flip(Grouped& p, int player) const {
    int half = players() / 2;
    bool alice = player < half;
    int q = alice ? player : player - half;
    uint32_t& vtx = alice ? p.v : p.w;
    auto& list = alice ? p.xv : p.yw;
    auto& vals = alice ? p.xf : p.yf;
    if (q < n_) {
        vtx ^= 1u << q;
        return;
    }
    q -= n_;
    if (q < m_ * n_) {
        list[q / n_] ^= 1u << (q % n_);
        return;
    }
    q -= m_ * n_;
    vals[q / b_] ^= 1u << (q % b_);
}

GameNP::Grouped GameNP::unpack(const Profile& flat) const {
    if (static_cast<int>(flat.size()) != players())
        throw std::invalid_argument("GameNP::unpack: wrong profile length");
    Grouped p;
    p.xv.assign(m_, 0);
    p.xf.assign(m_, 0);
    p.yw.assign(m_, 0);
    p.yf.assign(m_, 0);
    int at = 0;
    auto read = [&flat, &at](int bits) {
        uint32_t x = 0;
        for (int i = 0; i < bits; ++i)
            x |= static_cast<uint32_t>(flat[at++] & 1) << i;
        return x;
    };
    p.v = read(n_);
    for (int i = 0; i < m_; ++i)
        p.xv[i] = read(n_);
    for (int i = 0; i < m_; ++i)
        p.xf[i] = read(b_);
    p.w = read(n_);
    for (int i = 0; i < m_; ++i)
        p.yw[i] = read(n_);
    for (int i = 0; i < m_; ++i)
        p.yf[i] = read(b_);
    return p;
}

Profile GameNP::pack(const Grouped& p) const {
    Profile flat;
    flat.reserve(players());
    auto write = [&flat](uint32_t x, int bits) {
        for (int i = 0; i < bits; ++i)
            flat.push_back(static_cast<int>((x >> i) & 1));
    };
    write(p.v, n_);
    for (int i = 0; i < m_; ++i)
        write(p.xv[i], n_);
    for (int i = 0; i < m_; ++i)
        write(p.xf[i], b_);
    write(p.w, n_);
    for (int i = 0; i < m_; ++i)
        write(p.yw[i], n_);
    for (int i = 0; i < m_; ++i)
        write(p.yf[i], b_);
    return flat;
}

GameNP::Grouped GameNP::truthful_profile(uint32_t v) const {
    Grouped p;
    p.v = p.w = v;
    p.xv = ball2_[v];
    p.yw = ball2_[v];
    p.xf.resize(m_);
    p.yf.resize(m_);
    for (int i = 0; i < m_; ++i) {
        p.xf[i] = static_cast<uint32_t>(fa_[p.xv[i]] - 1);
        p.yf[i] = static_cast<uint32_t>(fb_[p.yw[i]] - 1);
    }
    return p;
}

bool GameNP::is_local_max_vertex(uint32_t v) const {
    Value s = fa_[v] + fb_[v];
    for (int i = 0; i < n_; ++i) {
        uint32_t u = v ^ (1u << i);
        if (fa_[u] + fb_[u] > s)
            return false;
    }
    return true;
}

std::vector<uint32_t> GameNP::local_max_vertices() const {
    std::vector<uint32_t> out;
    for (uint32_t v = 0; v < (1u << n_); ++v)
        if (is_local_max_vertex(v))
            out.push_back(v);
    return out;
}

int GameNP::first_violated_level(const Grouped& p) const {
    if (hamming(p.v, p.w) >= 2)
        return 1;
    if (dist_to_cover(p.xv, ball1_[p.v]) > 0 || dist_to_cover(p.yw, ball1_[p.w]) > 0)
        return 2;
    if (ball1_value_penalty(p.v, p.xv, p.xf, fa_) > 0 ||
        ball1_value_penalty(p.w, p.yw, p.yf, fb_) > 0)
        return 3;
    if (dist_to_exact(p.xv, ball2_[p.v]) > 0 || dist_to_exact(p.yw, ball2_[p.w]) > 0)
        return 5;
    if (all_value_penalty(p.xv, p.xf, fa_) > 0 || all_value_penalty(p.yw, p.yf, fb_) > 0)
        return 6;
    if (p.v != p.w)
        return 4;
    if (!is_local_max_vertex(p.v))
        return 7;
    return 0;
}

std::optional<int> GameNP::designated_improving_player(const Grouped& p) const {
    int level = first_violated_level(p);
    if (level == 0)
        return std::nullopt;
    int half = players() / 2;

    auto group_range = [&](bool alice, int kind) -> std::pair<int, int> {
        // kind 0 = vertex bits, 1 = report-list bits, 2 = valuation bits
        int base = alice ? 0 : half;
        if (kind == 0)
            return {base, base + n_};
        if (kind == 1)
            return {base + n_, base + n_ + m_ * n_};
        return {base + n_ + m_ * n_, base + n_ + m_ * n_ + m_ * b_};
    };

    std::vector<std::pair<int, int>> ranges;
    switch (level) {
    case 1:
        ranges = {group_range(true, 0), group_range(false, 0)};
        break;
    case 2:
        if (dist_to_cover(p.xv, ball1_[p.v]) > 0)
            ranges = {group_range(true, 1)};
        else
            ranges = {group_range(false, 1)};
        break;
    case 3:
        if (ball1_value_penalty(p.v, p.xv, p.xf, fa_) > 0)
            ranges = {group_range(true, 2)};
        else
            ranges = {group_range(false, 2)};
        break;
    case 5:
        if (dist_to_exact(p.xv, ball2_[p.v]) > 0)
            ranges = {group_range(true, 1)};
        else
            ranges = {group_range(false, 1)};
        break;
    case 6:
        if (all_value_penalty(p.xv, p.xf, fa_) > 0)
            ranges = {group_range(true, 2)};
        else
            ranges = {group_range(false, 2)};
        break;
    case 4:
        if (fa_[p.v] + fb_[p.v] < fa_[p.w] + fb_[p.w])
            ranges = {group_range(true, 0)};
        else
            ranges = {group_range(false, 0)};
        break;
    case 7:
        ranges = {group_range(true, 0), group_range(false, 0)};
        break;
    }

    Grouped q = p;
    for (auto [lo, hi] : ranges) {
        for (int player = lo; player < hi; ++player) {
            Value before = u_player(player, q);
            flip(q, player);
            Value after = u_player(player, q);
            flip(q, player);
            if (after > before)
                return player;
        }
    }
    return std::nullopt;
}

Game GameNP::as_game() const {
    auto self = std::make_shared<GameNP>(*this);
    Game g;
    g.players = players();
    g.actions.assign(players(), 2);
    g.utility = [self](int player, const Profile& flat) {
        return self->u_player(player, self->unpack(flat));
    };
    g.potential = [self](const Profile& flat) { return self->phi(self->unpack(flat)); };
    return g;
}

GameNP::Grouped GameNP::random_profile(Rng& rng) const {
    Grouped p;
    uint32_t vmask = (1u << n_) - 1, bmask = (1u << b_) - 1;
    p.v = static_cast<uint32_t>(rng.next()) & vmask;
    p.w = static_cast<uint32_t>(rng.next()) & vmask;
    p.xv.resize(m_);
    p.xf.resize(m_);
    p.yw.resize(m_);
    p.yf.resize(m_);
    for (int i = 0; i < m_; ++i) {
        p.xv[i] = static_cast<uint32_t>(rng.next()) & vmask;
        p.xf[i] = static_cast<uint32_t>(rng.next()) & bmask;
        p.yw[i] = static_cast<uint32_t>(rng.next()) & vmask;
        p.yf[i] = static_cast<uint32_t>(rng.next()) & bmask;
    }
    return p;
}

GameNP build_game_np(const SumLSInstance& on_hypercube) { return GameNP(on_hypercube); }

} // namespace ccls
