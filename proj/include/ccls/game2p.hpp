#pragma once

#include "ccls/games.hpp"
#include "ccls/search.hpp"

namespace ccls {

// Two-player potential game built from a split local-search instance on a
// degree-4 graph. An action is a vertex plus a report of five values (own
// and four neighbors); utilities reward adjacency, own-truthfulness, the
// opponent's report at the own vertex and vice versa, plus the private
// potential share. Pure Nash equilibria are exactly the doubly-truthful
// profiles at a common local maximum of f_a + f_b.
class Game2P {
  public:
    // Requires a 4-regular graph unless pad_degree is set, in which case
    // vertices of degree < 4 repeat themselves in the missing report slots.
    // Requires integer values in [1, W] and distinct adjacent sums.
    Game2P(const SumLSInstance& inst, bool pad_degree = false);

    uint64_t action_count() const { return action_count_; }
    int vertex_count() const { return n_; }
    Value w() const { return w_; }

    uint64_t encode(int v, const std::array<Value, 5>& report) const;
    int action_vertex(uint64_t a) const { return act_vertex_[a]; }
    std::array<Value, 5> action_report(uint64_t a) const;

    Value u_alice(uint64_t a, uint64_t b) const;
    Value u_bob(uint64_t a, uint64_t b) const;
    Value phi(uint64_t a, uint64_t b) const;

    bool truthful_alice(uint64_t a) const { return truth_a_[a] != 0; }
    bool truthful_bob(uint64_t b) const { return truth_b_[b] != 0; }
    uint64_t truthful_action_alice(int v) const;
    uint64_t truthful_action_bob(int v) const;

    // Full scan of the exact-potential identity: u - phi must not depend on
    // the own action. Returns the number of (profile, player) checks, or
    // throws std::logic_error naming the first failure.
    uint64_t identity_scan() const;

    // Exact pure Nash set by streaming best-response tables; pairs are
    // (alice action, bob action) in increasing order.
    std::vector<std::pair<uint64_t, uint64_t>> nash_set() const;

    // Expected Nash set: doubly-truthful profiles at local maxima of the sum.
    std::vector<std::pair<uint64_t, uint64_t>> predicted_nash_set() const;

    Game as_game() const;

  private:
    int n_ = 0;
    Value w_ = 0;
    uint64_t action_count_ = 0;
    std::vector<Value> fa_, fb_;
    std::vector<std::array<int, 4>> nbr_; // padded neighbor table
    std::vector<int8_t> slot_;            // slot_[w*n+v]: report slot of v in w's table, -1 none
    std::vector<uint8_t> adj_;            // closed adjacency matrix (d <= 1)
    std::vector<uint8_t> truth_a_, truth_b_;
    std::vector<int> act_vertex_;
    std::vector<std::array<int8_t, 5>> act_digits_; // report digits 0..W-1

    Value report_value_at(uint64_t action, int at_vertex) const;
    std::vector<int> local_max_vertices_;
};

Game2P build_game_2p(const SumLSInstance& inst, bool pad_degree = false);

} // namespace ccls
