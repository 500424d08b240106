#include "ccls/games.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <stdexcept>

namespace ccls {

uint64_t Game::profile_count() const {
    uint64_t n = 1;
    for (int a : actions) {
        if (a < 1 || n > UINT64_MAX / static_cast<uint64_t>(a))
            throw std::overflow_error("Game::profile_count overflow");
        n *= static_cast<uint64_t>(a);
    }
    return n;
}

Profile Game::profile_at(uint64_t idx) const {
    Profile p(players);
    for (int i = players - 1; i >= 0; --i) {
        p[i] = static_cast<int>(idx % actions[i]);
        idx /= actions[i];
    }
    return p;
}

Game two_player_table(std::vector<std::vector<Value>> ua, std::vector<std::vector<Value>> ub) {
    if (ua.empty() || ua.size() != ub.size() || ua[0].size() != ub[0].size())
        throw std::invalid_argument("two_player_table: shape mismatch");
    auto a = std::make_shared<std::vector<std::vector<Value>>>(std::move(ua));
    auto b = std::make_shared<std::vector<std::vector<Value>>>(std::move(ub));
    Game g;
    g.players = 2;
    g.actions = {static_cast<int>(a->size()), static_cast<int>((*a)[0].size())};
    g.utility = [a, b](int player, const Profile& p) {
        return player == 0 ? (*a)[p[0]][p[1]] : (*b)[p[0]][p[1]];
    };
    return g;
}

Value eq2_cycle_sum(const Game& g, int a, int a2, int b, int b2) {
    auto ua = [&](int x, int y) { return g.utility(0, {x, y}); };
    auto ub = [&](int x, int y) { return g.utility(1, {x, y}); };
    return (ua(a2, b) - ua(a, b)) + (ub(a2, b2) - ub(a2, b)) + (ua(a, b2) - ua(a2, b2)) +
           (ub(a, b) - ub(a, b2));
}

CycleCheck2P ms_cycle_check_2p(const Game& g, uint64_t cap, uint64_t samples, uint64_t seed) {
    if (g.players != 2)
        throw std::invalid_argument("ms_cycle_check_2p: needs a two-player game");
    const uint64_t na = g.actions[0], nb = g.actions[1];
    CycleCheck2P out;
    uint64_t pairs_a = na * (na - 1) / 2, pairs_b = nb * (nb - 1) / 2;
    out.exhaustive = pairs_a == 0 || pairs_b <= cap / std::max<uint64_t>(pairs_a, 1);

    auto test = [&](int a, int a2, int b, int b2) -> bool {
        ++out.cycles_checked;
        Value s = eq2_cycle_sum(g, a, a2, b, b2);
        if (s != 0) {
            out.violating = {a, a2, b, b2};
            out.cycle_sum = s;
            return false;
        }
        return true;
    };

    if (out.exhaustive) {
        for (int a = 0; a < static_cast<int>(na); ++a)
            for (int a2 = a + 1; a2 < static_cast<int>(na); ++a2)
                for (int b = 0; b < static_cast<int>(nb); ++b)
                    for (int b2 = b + 1; b2 < static_cast<int>(nb); ++b2)
                        if (!test(a, a2, b, b2))
                            return out;
    } else {
        Rng rng = seeded_rng(seed);
        for (uint64_t s = 0; s < samples; ++s) {
            int a = static_cast<int>(rng.below(na));
            int a2 = static_cast<int>(rng.below(na));
            int b = static_cast<int>(rng.below(nb));
            int b2 = static_cast<int>(rng.below(nb));
            if (a == a2 || b == b2)
                continue;
            if (!test(a, a2, b, b2))
                return out;
        }
    }
    out.exact = true;

    // Path integration from (0,0): deviate the row player first, then the
    // column player. The four-cycle condition makes this order-independent.
    if (out.exhaustive && na * nb <= (1ull << 24)) {
        out.potential_table.assign(na, std::vector<Value>(nb));
        for (uint64_t a = 0; a < na; ++a)
            for (uint64_t b = 0; b < nb; ++b)
                out.potential_table[a][b] =
                    (g.utility(0, {static_cast<int>(a), 0}) - g.utility(0, {0, 0})) +
                    (g.utility(1, {static_cast<int>(a), static_cast<int>(b)}) -
                     g.utility(1, {static_cast<int>(a), 0}));
    }
    return out;
}

Value eqn_cycle_sum(const Game& g, const Profile& a, const Profile& b, const std::vector<int>& pi_up,
                    const std::vector<int>& pi_down) {
    Value total = 0;
    Profile cur = a;
    for (int i : pi_up) {
        Value before = g.utility(i, cur);
        cur[i] = b[i];
        total += g.utility(i, cur) - before;
    }
    for (int i : pi_down) {
        Value before = g.utility(i, cur);
        cur[i] = a[i];
        total += g.utility(i, cur) - before;
    }
    return total;
}

CycleCheckNP ms_cycle_check_np(const Game& g, uint64_t cap, uint64_t samples, uint64_t seed) {
    CycleCheckNP out;
    uint64_t profiles = g.profile_count();
    uint64_t fact = 1;
    for (int i = 2; i <= g.players; ++i)
        fact *= static_cast<uint64_t>(i);
    bool small = profiles <= (1ull << 16) && fact <= (1ull << 10);
    uint64_t total = small ? profiles * profiles * fact * fact : UINT64_MAX;
    out.exhaustive = small && total <= cap;

    std::vector<int> base(g.players);
    std::iota(base.begin(), base.end(), 0);

    auto test = [&](const Profile& a, const Profile& b, const std::vector<int>& up,
                    const std::vector<int>& down) -> bool {
        ++out.cycles_checked;
        Value s = eqn_cycle_sum(g, a, b, up, down);
        if (s != 0) {
            out.a = a;
            out.b = b;
            out.pi_up = up;
            out.pi_down = down;
            out.cycle_sum = s;
            return false;
        }
        return true;
    };

    if (out.exhaustive) {
        for (uint64_t ia = 0; ia < profiles; ++ia) {
            Profile a = g.profile_at(ia);
            for (uint64_t ib = 0; ib < profiles; ++ib) {
                Profile b = g.profile_at(ib);
                std::vector<int> up = base;
                do {
                    std::vector<int> down = base;
                    do {
                        if (!test(a, b, up, down))
                            return out;
                    } while (std::next_permutation(down.begin(), down.end()));
                } while (std::next_permutation(up.begin(), up.end()));
            }
        }
    } else {
        Rng rng = seeded_rng(seed);
        for (uint64_t s = 0; s < samples; ++s) {
            Profile a = g.profile_at(rng.below(profiles));
            Profile b = g.profile_at(rng.below(profiles));
            std::vector<int> up = base, down = base;
            for (size_t i = up.size(); i > 1; --i)
                std::swap(up[i - 1], up[rng.below(i)]);
            for (size_t i = down.size(); i > 1; --i)
                std::swap(down[i - 1], down[rng.below(i)]);
            if (!test(a, b, up, down))
                return out;
        }
    }
    out.exact = true;
    return out;
}

std::optional<IdentityCounterexample> potential_identity_check(const Game& g, uint64_t cap,
                                                               uint64_t samples, uint64_t seed) {
    if (!g.potential)
        throw std::invalid_argument("potential_identity_check: game has no attached potential");
    uint64_t profiles = g.profile_count();
    uint64_t alts = 0;
    for (int a : g.actions)
        alts += static_cast<uint64_t>(a) - 1;
    bool exhaustive = profiles <= cap / std::max<uint64_t>(alts, 1);

    auto test = [&](Profile& p, int player, int alt) -> std::optional<IdentityCounterexample> {
        int orig = p[player];
        Value u0 = g.utility(player, p), phi0 = g.potential(p);
        p[player] = alt;
        Value du = g.utility(player, p) - u0;
        Value dphi = g.potential(p) - phi0;
        p[player] = orig;
        if (du != dphi)
            return IdentityCounterexample{player, p, alt, du, dphi};
        return std::nullopt;
    };

    if (exhaustive) {
        for (uint64_t i = 0; i < profiles; ++i) {
            Profile p = g.profile_at(i);
            for (int player = 0; player < g.players; ++player)
                for (int alt = 0; alt < g.actions[player]; ++alt) {
                    if (alt == p[player])
                        continue;
                    if (auto bad = test(p, player, alt))
                        return bad;
                }
        }
    } else {
        Rng rng = seeded_rng(seed);
        for (uint64_t s = 0; s < samples; ++s) {
            Profile p = g.profile_at(rng.below(profiles));
            int player = static_cast<int>(rng.below(g.players));
            int alt = static_cast<int>(rng.below(g.actions[player]));
            if (alt == p[player])
                continue;
            if (auto bad = test(p, player, alt))
                return bad;
        }
    }
    return std::nullopt;
}

std::optional<Deviation> improving_deviation(const Game& g, const Profile& p) {
    Profile q = p;
    for (int player = 0; player < g.players; ++player) {
        Value u0 = g.utility(player, p);
        for (int alt = 0; alt < g.actions[player]; ++alt) {
            if (alt == p[player])
                continue;
            q[player] = alt;
            if (g.utility(player, q) > u0)
                return Deviation{player, alt};
        }
        q[player] = p[player];
    }
    return std::nullopt;
}

std::vector<Profile> pure_nash_enumerate(const Game& g, uint64_t cap) {
    uint64_t profiles = g.profile_count();
    if (profiles > cap)
        throw std::length_error("pure_nash_enumerate: profile space exceeds cap");
    std::vector<Profile> out;
    for (uint64_t i = 0; i < profiles; ++i) {
        Profile p = g.profile_at(i);
        if (!improving_deviation(g, p))
            out.push_back(std::move(p));
    }
    return out;
}

BetterReplyCycleResult better_reply_cycle(const Game& g, uint64_t cap) {
    uint64_t profiles = g.profile_count();
    if (profiles > cap)
        throw std::length_error("better_reply_cycle: profile space exceeds cap");

    // Strides for single-coordinate moves in the mixed-radix index.
    std::vector<uint64_t> stride(g.players, 1);
    for (int i = g.players - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * static_cast<uint64_t>(g.actions[i + 1]);

    auto moves = [&](uint64_t idx, Profile& p) {
        std::vector<uint64_t> out;
        for (int player = 0; player < g.players; ++player) {
            Value u0 = g.utility(player, p);
            int orig = p[player];
            for (int alt = 0; alt < g.actions[player]; ++alt) {
                if (alt == orig)
                    continue;
                p[player] = alt;
                if (g.utility(player, p) > u0)
                    out.push_back(idx + (alt - orig) * stride[player]);
            }
            p[player] = orig;
        }
        return out;
    };

    // Iterative DFS over the strict-improvement digraph.
    std::vector<uint8_t> color(profiles, 0); // 0 unseen, 1 on stack, 2 done
    std::vector<uint64_t> parent(profiles, UINT64_MAX);
    for (uint64_t root = 0; root < profiles; ++root) {
        if (color[root])
            continue;
        std::vector<std::pair<uint64_t, size_t>> stack;
        std::vector<std::vector<uint64_t>> succ_stack;
        color[root] = 1;
        Profile pr = g.profile_at(root);
        succ_stack.push_back(moves(root, pr));
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [node, next] = stack.back();
            if (next < succ_stack.back().size()) {
                uint64_t to = succ_stack.back()[next++];
                if (color[to] == 1) {
                    // back edge: reconstruct the cycle
                    BetterReplyCycleResult res;
                    res.acyclic = false;
                    std::vector<uint64_t> chain;
                    chain.push_back(to);
                    for (uint64_t x = node; x != to; x = parent[x])
                        chain.push_back(x);
                    chain.push_back(to);
                    std::reverse(chain.begin() + 1, chain.end() - 1);
                    for (uint64_t x : chain)
                        res.cycle.push_back(g.profile_at(x));
                    return res;
                }
                if (color[to] == 0) {
                    color[to] = 1;
                    parent[to] = node;
                    Profile pt = g.profile_at(to);
                    succ_stack.push_back(moves(to, pt));
                    stack.emplace_back(to, 0);
                }
            } else {
                color[node] = 2;
                stack.pop_back();
                succ_stack.pop_back();
            }
        }
    }
    return {};
}

Game ordinal_gadget_2x2(Value x, Value y) {
    return two_player_table({{2, 1}, {1, x}}, {{1, 2}, {y, 1}});
}

Game build_ordinal_gadget_2p(const std::vector<std::vector<Value>>& x,
                             const std::vector<std::vector<Value>>& y) {
    const int n = static_cast<int>(x.size());
    if (n == 0 || y.size() != x.size())
        throw std::invalid_argument("build_ordinal_gadget_2p: shape mismatch");
    auto xs = std::make_shared<std::vector<std::vector<Value>>>(x);
    auto ys = std::make_shared<std::vector<std::vector<Value>>>(y);
    Game g;
    g.players = 2;
    g.actions = {2 * n, 2 * n};
    g.utility = [xs, ys](int player, const Profile& p) -> Value {
        int i = p[0] / 2, ai = p[0] % 2;
        int j = p[1] / 2, bj = p[1] % 2;
        Value xx = (*xs)[i][j], yy = (*ys)[i][j];
        Value row[2][2] = {{2, 1}, {1, xx}};
        Value col[2][2] = {{1, 2}, {yy, 1}};
        // block-dominant overlay: 3*ceil(action/2) with 1-based actions
        if (player == 0)
            return row[ai][bj] + 3 * (i + 1);
        return col[ai][bj] + 3 * (j + 1);
    };
    return g;
}

Game build_ordinal_gadget_np(const std::vector<Value>& x, const std::vector<Value>& y, int n) {
    if (n < 0 || n > 20 || x.size() != (1ull << n) || y.size() != (1ull << n))
        throw std::invalid_argument("build_ordinal_gadget_np: parameter tables must have 2^n entries");
    auto xs = std::make_shared<std::vector<Value>>(x);
    auto ys = std::make_shared<std::vector<Value>>(y);
    Game g;
    g.players = n + 2;
    g.actions.assign(n + 2, 2);
    g.utility = [xs, ys, n](int player, const Profile& p) -> Value {
        if (player < n)
            return p[player]; // 1 is dominant
        uint64_t idx = 0;
        for (int i = 0; i < n; ++i)
            idx |= static_cast<uint64_t>(p[i]) << i;
        Value xx = (*xs)[idx], yy = (*ys)[idx];
        Value row[2][2] = {{2, 1}, {1, xx}};
        Value col[2][2] = {{1, 2}, {yy, 1}};
        return player == n ? row[p[n]][p[n + 1]] : col[p[n]][p[n + 1]];
    };
    return g;
}

} // namespace ccls
