#pragma once

#include "ccls/games.hpp"
#include "ccls/search.hpp"

#include <string>

namespace ccls {

// Message log of a two- (or few-) party protocol run with exact bit
// accounting. All randomness is public-coin, drawn from the seed; replaying
// with the same seed and inputs reproduces the transcript bit for bit.
struct Message {
    int sender = 0;
    uint64_t bits = 0;
    std::vector<uint64_t> payload;
    std::string label;
};

struct Transcript {
    uint64_t seed = 0;
    std::string outcome;
    std::vector<Message> messages;

    uint64_t total_bits() const {
        uint64_t n = 0;
        for (const Message& m : messages)
            n += m.bits;
        return n;
    }
    void send(int sender, uint64_t bits, std::vector<uint64_t> payload, std::string label) {
        messages.push_back({sender, bits, std::move(payload), std::move(label)});
    }
};

// Randomized test for sum(v_1..v_k) == 0: every party publishes, per
// repetition, its vector's evaluation at a shared random point modulo a
// shared random 32-bit prime. Zero sums are always accepted; a nonzero sum
// survives a repetition with probability < 2^-30 + (c-1)/p, so `confidence`
// repetitions push one-sided error below 2^-confidence.
struct EqualSumResult {
    bool sum_is_zero = false;
    Transcript transcript;
};
EqualSumResult fingerprint_equal_sum(const std::vector<std::vector<Value>>& vectors, int confidence,
                                     uint64_t seed);

// Exact-potential detection. Each party folds its private utilities into
// the vector of its contributions to every canonical deviation cycle and
// the parties run the equal-sum fingerprint on it.
struct DetectResult {
    bool exact = false;
    uint64_t cycle_vector_length = 0;
    Transcript transcript;
};
DetectResult detect_exact_potential_2p(const std::vector<std::vector<Value>>& ua,
                                       const std::vector<std::vector<Value>>& ub, int confidence,
                                       uint64_t seed);

// owner[i] = party holding player i's utility; needs a small game.
DetectResult detect_exact_potential_np(const Game& g, const std::vector<int>& owner, int parties,
                                       int confidence, uint64_t seed);

struct WitnessResult {
    bool accepted = false;
    std::string detail;
    Transcript transcript;
};

// Nondeterministic verification of a claimed local maximum: the parties
// exchange their values on the closed neighborhood, 2(deg+1)ceil(log(2W+1))
// bits in total.
WitnessResult verify_sumls_witness(const SumLSInstance& inst, const VertexCode& v);

// Witnesses for the total equilibrium search problem: a profile claimed to
// be Nash (each side checks its own best responses, one bit each), or a
// deviation cycle claimed to violate the exact-potential condition (the
// parties exchange the few utility values the cycle touches).
struct TotExPotWitness {
    enum class Kind { NashProfile, Cycle2P, CycleNP };
    Kind kind = Kind::NashProfile;
    Profile profile;                        // NashProfile
    std::array<int, 4> cycle2p{};           // Cycle2P: a, a', b, b'
    Profile a, b;                           // CycleNP
    std::vector<int> pi_up, pi_down;
};
WitnessResult verify_totexpot_witness_2p(const std::vector<std::vector<Value>>& ua,
                                         const std::vector<std::vector<Value>>& ub,
                                         const TotExPotWitness& w);
WitnessResult verify_totexpot_witness_np(const Game& g, const std::vector<int>& owner,
                                         const TotExPotWitness& w);

// Trivial upper bound: Alice ships her whole table, Bob solves locally and
// announces a local maximum. |V| ceil(log W) + ceil(log |V|) bits.
struct BaselineResult {
    VertexCode solution;
    Transcript transcript;
};
BaselineResult baseline_full_exchange(const SumLSInstance& inst, uint64_t cap = kBruteForceCap);

// Exact-potential game generator for protocol stress tests: u_a = phi + g(b),
// u_b = phi + h(a) for seeded random tables. With `plant_violation` one
// entry of u_a is bumped, breaking some four-cycle.
void random_exact_game(int n, Value w, Rng& rng, bool plant_violation,
                       std::vector<std::vector<Value>>& ua, std::vector<std::vector<Value>>& ub);

} // namespace ccls
