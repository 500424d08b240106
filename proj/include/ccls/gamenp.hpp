#pragma once

#include "ccls/games.hpp"
#include "ccls/search.hpp"

namespace ccls {

// Binary-action potential game built from a split local-search instance on
// the n-cube. Alice's side is a group of n vertex players, m*n report-list
// players and m*b valuation players (m = 1 + n + n(n-1)/2 covers the radius-2
// ball, b = log W bits per value); Bob's side mirrors it. All players of a
// group share one utility: a ladder of six priority terms weighted so that
// improving a level beats any swing of the levels below it. Pure Nash
// equilibria sit at doubly-truthful radius-2 reports of a common local
// maximum of f_a + f_b.
class GameNP {
  public:
    explicit GameNP(const SumLSInstance& on_hypercube);

    struct Grouped {
        uint32_t v = 0, w = 0;
        std::vector<uint32_t> xv, xf; // m vertex entries (n bits), m value entries (b bits)
        std::vector<uint32_t> yw, yf;
    };

    int n() const { return n_; }
    int m() const { return m_; }
    int value_bits() const { return b_; }
    Value w() const { return w_; }
    int players() const { return 2 * (n_ + m_ * (n_ + b_)); }
    const std::array<Value, 6>& priority_weights() const { return k_; }

    Value u_alice(const Grouped& p) const;
    Value u_bob(const Grouped& p) const;
    Value u_player(int player, const Grouped& p) const;
    Value phi(const Grouped& p) const;

    void flip(Grouped& p, int player) const;
    Grouped unpack(const Profile& flat) const;
    Profile pack(const Grouped& p) const;

    // Canonical doubly-truthful profile at vertex v: both sides sit on v,
    // both report the sorted radius-2 ball with correct valuations.
    Grouped truthful_profile(uint32_t v) const;

    bool is_local_max_vertex(uint32_t v) const;
    std::vector<uint32_t> local_max_vertices() const;

    // The proof's narrowing order: 1 distance, 2 ball-1 coverage, 3 ball-1
    // valuations, 5 exact ball-2 list, 6 remaining valuations, then 4
    // (split vertices) and 7 (not a local maximum); 0 = conforming.
    int first_violated_level(const Grouped& p) const;
    // Searches the proof's designated group for a strictly improving player.
    std::optional<int> designated_improving_player(const Grouped& p) const;

    Game as_game() const;

    // Seeded uniform profile.
    Grouped random_profile(Rng& rng) const;

  private:
    int n_ = 0, m_ = 0, b_ = 0;
    Value w_ = 0;
    std::array<Value, 6> k_{};
    std::vector<Value> fa_, fb_;         // by vertex, 2^n entries
    std::vector<std::vector<uint32_t>> ball1_, ball2_; // sorted

    Value dist_to_cover(const std::vector<uint32_t>& list, const std::vector<uint32_t>& targets) const;
    Value dist_to_exact(const std::vector<uint32_t>& list, const std::vector<uint32_t>& targets) const;
    Value val_at(const std::vector<uint32_t>& ov, const std::vector<uint32_t>& of, uint32_t at) const;
    Value ball1_value_penalty(uint32_t v, const std::vector<uint32_t>& ov,
                              const std::vector<uint32_t>& of, const std::vector<Value>& f) const;
    Value all_value_penalty(const std::vector<uint32_t>& ov, const std::vector<uint32_t>& of,
                            const std::vector<Value>& f) const;
    Value shared_report_terms(const Grouped& p) const;
};

GameNP build_game_np(const SumLSInstance& on_hypercube);

} // namespace ccls
