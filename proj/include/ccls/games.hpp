#pragma once

#include "ccls/code.hpp"
#include "ccls/rng.hpp"

#include <array>
#include <functional>
#include <optional>
#include <vector>

namespace ccls {

using Profile = std::vector<int>;

// Normal-form game behind oracles. An attached potential claims the exact
// identity u_i(a) - u_i(a'_i, a_-i) = phi(a) - phi(a'_i, a_-i); claims are
// checked, never trusted.
struct Game {
    int players = 0;
    std::vector<int> actions; // per player
    std::function<Value(int player, const Profile&)> utility;
    std::function<Value(const Profile&)> potential; // may be empty

    uint64_t profile_count() const;
    Profile profile_at(uint64_t idx) const;
};

Game two_player_table(std::vector<std::vector<Value>> ua, std::vector<std::vector<Value>> ub);

// ---- Monderer-Shapley cycle conditions ----

// Four-cycle condition for two-player games: over every a<a', b<b' the
// gains around the unilateral-deviation square sum to zero iff the game is
// an exact potential game. When exact, a potential is synthesized by path
// integration from profile (0,0).
struct CycleCheck2P {
    bool exact = false;
    bool exhaustive = true;
    uint64_t cycles_checked = 0;
    std::array<int, 4> violating = {0, 0, 0, 0}; // a, a', b, b'
    Value cycle_sum = 0;
    std::vector<std::vector<Value>> potential_table; // filled when exact
};
CycleCheck2P ms_cycle_check_2p(const Game& g, uint64_t cap = 1ull << 26, uint64_t samples = 20000,
                               uint64_t seed = 1);

Value eq2_cycle_sum(const Game& g, int a, int a2, int b, int b2);

// n-player condition: closed deviation paths a -> b -> a, each player
// switching once each way, ordered by a pair of permutations.
struct CycleCheckNP {
    bool exact = false;
    bool exhaustive = true;
    uint64_t cycles_checked = 0;
    Profile a, b;
    std::vector<int> pi_up, pi_down;
    Value cycle_sum = 0;
};
CycleCheckNP ms_cycle_check_np(const Game& g, uint64_t cap = 1ull << 24, uint64_t samples = 5000,
                               uint64_t seed = 1);

Value eqn_cycle_sum(const Game& g, const Profile& a, const Profile& b, const std::vector<int>& pi_up,
                    const std::vector<int>& pi_down);

// ---- potential / equilibrium checks ----

struct IdentityCounterexample {
    int player;
    Profile at;
    int alt;
    Value du, dphi;
};
// Verifies du == dphi over unilateral deviations; exhaustive when the
// deviation count fits the cap, else seeded samples.
std::optional<IdentityCounterexample> potential_identity_check(const Game& g,
                                                               uint64_t cap = 1ull << 24,
                                                               uint64_t samples = 20000,
                                                               uint64_t seed = 1);

struct Deviation {
    int player;
    int action;
};
// First strictly improving unilateral deviation in (player, action) order.
std::optional<Deviation> improving_deviation(const Game& g, const Profile& p);

std::vector<Profile> pure_nash_enumerate(const Game& g, uint64_t cap = 1ull << 20);

// ---- better-reply dynamics ----

struct BetterReplyCycleResult {
    bool acyclic = true;
    std::vector<Profile> cycle; // closed: front() == back()
};
BetterReplyCycleResult better_reply_cycle(const Game& g, uint64_t cap = 1ull << 20);

// ---- ordinal-potential gadgets ----

// The 2x2 game with row payoffs [[2,1],[1,x]] and column payoffs
// [[1,2],[y,1]]; it has a better-reply cycle iff x = y = 2.
Game ordinal_gadget_2x2(Value x, Value y);

// N x N block matrix of copies of the gadget plus a block-dominant overlay:
// a better-reply cycle exists iff some block has x = y = 2.
Game build_ordinal_gadget_2p(const std::vector<std::vector<Value>>& x,
                             const std::vector<std::vector<Value>>& y);

// n+2 players: the first n have a dominant strategy, the last two play the
// gadget parameterized by the first n's bit profile.
Game build_ordinal_gadget_np(const std::vector<Value>& x, const std::vector<Value>& y, int n);

} // namespace ccls
