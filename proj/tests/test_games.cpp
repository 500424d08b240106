#include "ccls/game2p.hpp"
#include "ccls/games.hpp"

#include <doctest.h>

#include <set>

using namespace ccls;

namespace {

Game matching_pennies() { return two_player_table({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}); }

Game prisoners_dilemma() { return two_player_table({{3, 0}, {5, 1}}, {{3, 5}, {0, 1}}); }

SumLSInstance k5_instance(std::vector<Value> fa, std::vector<Value> fb, Value w) {
    auto a = std::make_shared<std::vector<Value>>(std::move(fa));
    auto b = std::make_shared<std::vector<Value>>(std::move(fb));
    auto g = complete_graph(5);
    SumLSInstance out;
    out.graph = g;
    out.f_a = [g, a](const VertexCode& v) { return (*a)[v[0]]; };
    out.f_b = [g, b](const VertexCode& v) { return (*b)[v[0]]; };
    out.value_bound = w;
    out.distinct_adjacent_sums = true;
    return out;
}

} // namespace

TEST_CASE("four-cycle check on the classics") {
    CycleCheck2P mp = ms_cycle_check_2p(matching_pennies());
    CHECK_FALSE(mp.exact);
    CHECK(mp.cycle_sum == -8);

    CycleCheck2P pd = ms_cycle_check_2p(prisoners_dilemma());
    CHECK(pd.exact);
    REQUIRE(!pd.potential_table.empty());
    // the synthesized potential satisfies the identity
    Game g = prisoners_dilemma();
    auto table = std::make_shared<std::vector<std::vector<Value>>>(pd.potential_table);
    g.potential = [table](const Profile& p) { return (*table)[p[0]][p[1]]; };
    CHECK(!potential_identity_check(g).has_value());
}

TEST_CASE("identical interest games certify with their own utility") {
    Game g = two_player_table({{4, 1}, {2, 7}}, {{4, 1}, {2, 7}});
    g.potential = [g](const Profile& p) { return g.utility(0, p); };
    CHECK(!potential_identity_check(g).has_value());
    CHECK(ms_cycle_check_2p(g).exact);
}

TEST_CASE("opponent-independent games use the sum of own-action utilities") {
    auto ua = std::vector<std::vector<Value>>{{5, 5, 5}, {2, 2, 2}, {9, 9, 9}};
    auto ub = std::vector<std::vector<Value>>{{1, 4, 6}, {1, 4, 6}, {1, 4, 6}};
    Game g = two_player_table(ua, ub);
    g.potential = [](const Profile& p) {
        Value own_a[3] = {5, 2, 9}, own_b[3] = {1, 4, 6};
        return own_a[p[0]] + own_b[p[1]];
    };
    CHECK(!potential_identity_check(g).has_value());
}

TEST_CASE("a perturbed certified game yields a counterexample") {
    Game g = prisoners_dilemma();
    CycleCheck2P chk = ms_cycle_check_2p(g);
    auto table = std::make_shared<std::vector<std::vector<Value>>>(chk.potential_table);
    auto broken = std::make_shared<std::vector<std::vector<Value>>>(
        std::vector<std::vector<Value>>{{3, 0}, {5, 2}}); // one entry bumped
    Game bad;
    bad.players = 2;
    bad.actions = {2, 2};
    bad.utility = [broken, g](int player, const Profile& p) {
        return player == 0 ? (*broken)[p[0]][p[1]] : g.utility(1, p);
    };
    bad.potential = [table](const Profile& p) { return (*table)[p[0]][p[1]]; };
    auto cex = potential_identity_check(bad);
    REQUIRE(cex.has_value());
    CHECK(cex->du != cex->dphi);
}

TEST_CASE("n-player cycle condition specializes to the 2-player one") {
    Rng rng = seeded_rng(4);
    for (int t = 0; t < 20; ++t) {
        std::vector<std::vector<Value>> ua(3, std::vector<Value>(3)), ub = ua;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                ua[i][j] = rng.range(-4, 4);
                ub[i][j] = rng.range(-4, 4);
            }
        Game g = two_player_table(ua, ub);
        CHECK(ms_cycle_check_2p(g).exact == ms_cycle_check_np(g).exact);
    }
}

TEST_CASE("three-player identical interest passes, planted gadget face fails") {
    Game good;
    good.players = 3;
    good.actions = {2, 2, 2};
    good.utility = [](int, const Profile& p) { return p[0] + 2 * p[1] + 4 * p[2]; };
    CHECK(ms_cycle_check_np(good).exact);

    // plant the better-reply cycle gadget on the face p[2] = 1
    Game bad;
    bad.players = 3;
    bad.actions = {2, 2, 2};
    bad.utility = [](int player, const Profile& p) -> Value {
        if (player == 2)
            return p[2];
        if (p[2] == 0)
            return 0;
        Value row[2][2] = {{2, 1}, {1, 2}};
        Value col[2][2] = {{1, 2}, {2, 1}};
        return player == 0 ? row[p[0]][p[1]] : col[p[0]][p[1]];
    };
    CycleCheckNP chk = ms_cycle_check_np(bad);
    CHECK_FALSE(chk.exact);
    CHECK(chk.cycle_sum != 0);
}

TEST_CASE("improving deviations and pure Nash enumeration") {
    Game ii = two_player_table({{4, 1}, {2, 7}}, {{4, 1}, {2, 7}});
    CHECK(!improving_deviation(ii, {1, 1}).has_value()); // argmax profile is Nash
    CHECK(improving_deviation(ii, {0, 1}).has_value());

    for (const Profile& p : {Profile{0, 0}, {0, 1}, {1, 0}, {1, 1}})
        CHECK(improving_deviation(matching_pennies(), p).has_value());
    CHECK(pure_nash_enumerate(matching_pennies()).empty());
}

TEST_CASE("better-reply cycles in the 2x2 gadget family") {
    for (Value x : {0, 2})
        for (Value y : {0, 2}) {
            BetterReplyCycleResult res = better_reply_cycle(ordinal_gadget_2x2(x, y));
            CHECK(res.acyclic == !(x == 2 && y == 2));
            if (!res.acyclic) {
                CHECK(res.cycle.size() == 5); // closed 4-cycle
                CHECK(res.cycle.front() == res.cycle.back());
            }
        }
    // exact potential games are always acyclic
    CHECK(better_reply_cycle(prisoners_dilemma()).acyclic);
}

TEST_CASE("two-player block gadget: cycle iff some block has x=y=2") {
    std::vector<std::vector<Value>> zero(3, std::vector<Value>(3, 0));
    CHECK(better_reply_cycle(build_ordinal_gadget_2p(zero, zero)).acyclic);

    auto x = zero, y = zero;
    x[1][2] = 2;
    y[1][2] = 2;
    BetterReplyCycleResult res = better_reply_cycle(build_ordinal_gadget_2p(x, y));
    CHECK_FALSE(res.acyclic);
    // the cycle stays inside block (1,2)
    for (const Profile& p : res.cycle) {
        CHECK(p[0] / 2 == 1);
        CHECK(p[1] / 2 == 2);
    }

    // sampled equivalence across parameter pairs
    Rng rng = seeded_rng(12);
    for (int t = 0; t < 60; ++t) {
        bool hit = false;
        auto xs = zero, ys = zero;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                xs[i][j] = rng.coin() ? 2 : 0;
                ys[i][j] = rng.coin() ? 2 : 0;
                hit = hit || (xs[i][j] == 2 && ys[i][j] == 2);
            }
        CHECK(better_reply_cycle(build_ordinal_gadget_2p(xs, ys)).acyclic == !hit);
    }
}

TEST_CASE("n-player gadget: cycle iff the parameter maps intersect at 2") {
    const int n = 2;
    for (uint32_t xm = 0; xm < 16; ++xm)
        for (uint32_t ym = 0; ym < 16; ++ym) {
            std::vector<Value> x(4), y(4);
            bool hit = false;
            for (int a = 0; a < 4; ++a) {
                x[a] = (xm >> a) & 1 ? 2 : 0;
                y[a] = (ym >> a) & 1 ? 2 : 0;
                hit = hit || (x[a] == 2 && y[a] == 2);
            }
            BetterReplyCycleResult res = better_reply_cycle(build_ordinal_gadget_np(x, y, n));
            CHECK(res.acyclic == !hit);
            if (!res.acyclic) {
                // the cycle only uses profiles extending a hot assignment
                for (const Profile& p : res.cycle) {
                    int a = p[0] | (p[1] << 1);
                    CHECK(x[a] == 2);
                    CHECK(y[a] == 2);
                }
            }
        }
}

TEST_CASE("two-player game from a K5 instance at W=3") {
    // sums 2,3,4,5,6: unique local maximum at vertex 4
    SumLSInstance inst = k5_instance({1, 1, 2, 2, 3}, {1, 2, 2, 3, 3}, 3);
    Game2P game = build_game_2p(inst);
    CHECK(game.action_count() == 5ull * 3 * 3 * 3 * 3 * 3);

    // the exact-potential identity over every unilateral deviation
    CHECK(game.identity_scan() == 2 * game.action_count() * game.action_count());

    auto nash = game.nash_set();
    auto predicted = game.predicted_nash_set();
    REQUIRE(predicted.size() == 1);
    CHECK(game.action_vertex(predicted[0].first) == 4);
    CHECK(nash == predicted);

    // truthful local-max profiles are Nash in the generic-game view
    Game view = game.as_game();
    Profile p{static_cast<int>(predicted[0].first), static_cast<int>(predicted[0].second)};
    CHECK(!improving_deviation(view, p).has_value());
}

TEST_CASE("2p builder rejects bad inputs") {
    SumLSInstance tied = k5_instance({1, 2, 3, 4, 5}, {5, 4, 3, 2, 1}, 5); // all sums 6
    CHECK_THROWS_AS(build_game_2p(tied), std::invalid_argument);

    auto p4 = path_graph(4); // degree <= 2, not 4-regular
    SumLSInstance low;
    low.graph = p4;
    low.f_a = [](const VertexCode& v) { return v[0] + 1; };
    low.f_b = [](const VertexCode& v) { return v[0] == 1 ? 2 : 1; };
    low.value_bound = 4;
    CHECK_THROWS_AS(build_game_2p(low), std::invalid_argument);
    CHECK_NOTHROW(build_game_2p(low, true)); // padding is an explicit opt-in
}

TEST_CASE("misreporting or moving apart strictly loses potential at a truthful pair") {
    SumLSInstance inst = k5_instance({1, 2, 3, 4, 5}, {5, 3, 1, 4, 2}, 5);
    Game2P game = build_game_2p(inst);
    // truthful neighbors at 0 and 1: the lower-sum side's switch raises phi
    uint64_t a = game.truthful_action_alice(1); // sum 5
    uint64_t b = game.truthful_action_bob(0);   // sum 6
    Value before = game.phi(a, b);
    uint64_t a2 = game.truthful_action_alice(0);
    CHECK(game.phi(a2, b) > before);
    CHECK(game.phi(a2, b) - before == (1 + 5) - (2 + 3));
}
