#include "ccls/protocol.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ccls {

namespace {

uint64_t mulmod32(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

bool is_prime_u32(uint64_t n) {
    if (n < 2 || n % 2 == 0)
        return n == 2;
    uint64_t d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // Deterministic Miller-Rabin bases for n < 3.2e18 subset; 2,7,61 covers
    // everything below 4.76e9.
    for (uint64_t a : {2ull, 7ull, 61ull}) {
        if (a % n == 0)
            continue;
        uint64_t x = 1, base = a % n, e = d;
        while (e) {
            if (e & 1)
                x = mulmod32(x, base, n);
            base = mulmod32(base, base, n);
            e >>= 1;
        }
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (int i = 1; i < r && witness; ++i) {
            x = mulmod32(x, x, n);
            if (x == n - 1)
                witness = false;
        }
        if (witness)
            return false;
    }
    return true;
}

uint64_t random_prime_32(Rng& rng) {
    for (;;) {
        uint64_t cand = (1ull << 31) | rng.below(1ull << 31) | 1ull;
        if (is_prime_u32(cand))
            return cand;
    }
}

uint64_t fingerprint(const std::vector<Value>& v, uint64_t r, uint64_t p) {
    // Horner evaluation of sum v[t] r^t mod p.
    uint64_t acc = 0;
    for (size_t t = v.size(); t-- > 0;) {
        acc = mulmod32(acc, r, p);
        Value x = v[t] % static_cast<Value>(p);
        if (x < 0)
            x += static_cast<Value>(p);
        acc = (acc + static_cast<uint64_t>(x)) % p;
    }
    return acc;
}

int bits_for_value_range(Value max_abs) {
    uint64_t span = 2 * static_cast<uint64_t>(max_abs) + 1;
    return std::max(1, static_cast<int>(std::bit_width(span - 1)));
}

} // namespace

EqualSumResult fingerprint_equal_sum(const std::vector<std::vector<Value>>& vectors, int confidence,
                                     uint64_t seed) {
    if (vectors.empty())
        throw std::invalid_argument("fingerprint_equal_sum: no parties");
    size_t len = vectors[0].size();
    for (const auto& v : vectors)
        if (v.size() != len)
            throw std::invalid_argument("fingerprint_equal_sum: vector length mismatch");

    EqualSumResult out;
    out.transcript.seed = seed;
    Rng rng = seeded_rng(seed);
    bool all_zero = true;
    for (int rep = 0; rep < confidence; ++rep) {
        uint64_t p = random_prime_32(rng);
        uint64_t r = rng.below(p);
        uint64_t sum = 0;
        for (size_t party = 0; party < vectors.size(); ++party) {
            uint64_t fp = fingerprint(vectors[party], r, p);
            out.transcript.send(static_cast<int>(party), 32, {fp},
                                "fingerprint rep " + std::to_string(rep));
            sum = (sum + fp) % p;
        }
        if (sum != 0)
            all_zero = false;
    }
    out.sum_is_zero = all_zero;
    out.transcript.outcome = all_zero ? "sum-is-zero" : "differs";
    return out;
}

DetectResult detect_exact_potential_2p(const std::vector<std::vector<Value>>& ua,
                                       const std::vector<std::vector<Value>>& ub, int confidence,
                                       uint64_t seed) {
    const size_t na = ua.size(), nb = na ? ua[0].size() : 0;
    if (na == 0 || ub.size() != na || ub[0].size() != nb)
        throw std::invalid_argument("detect_exact_potential_2p: table shape mismatch");

    // Canonical four-cycles (a < a', b < b') in row-major order. Alice's
    // entry carries her two utility differences around the cycle, Bob's the
    // other two, so the cycle condition is exactly "the vectors sum to 0".
    std::vector<Value> va, vb;
    va.reserve(na * (na - 1) / 2 * nb * (nb - 1) / 2);
    for (size_t a = 0; a < na; ++a)
        for (size_t a2 = a + 1; a2 < na; ++a2)
            for (size_t b = 0; b < nb; ++b)
                for (size_t b2 = b + 1; b2 < nb; ++b2) {
                    va.push_back((ua[a2][b] - ua[a][b]) + (ua[a][b2] - ua[a2][b2]));
                    vb.push_back((ub[a2][b2] - ub[a2][b]) + (ub[a][b] - ub[a][b2]));
                }

    EqualSumResult eq = fingerprint_equal_sum({va, vb}, confidence, seed);
    DetectResult out;
    out.exact = eq.sum_is_zero;
    out.cycle_vector_length = va.size();
    out.transcript = std::move(eq.transcript);
    out.transcript.outcome = out.exact ? "exact-potential" : "not-exact";
    return out;
}

DetectResult detect_exact_potential_np(const Game& g, const std::vector<int>& owner, int parties,
                                       int confidence, uint64_t seed) {
    if (static_cast<int>(owner.size()) != g.players)
        throw std::invalid_argument("detect_exact_potential_np: owner per player required");
    uint64_t profiles = g.profile_count();
    uint64_t fact = 1;
    for (int i = 2; i <= g.players; ++i)
        fact *= static_cast<uint64_t>(i);
    if (profiles > 64 || fact > 5040)
        throw std::length_error("detect_exact_potential_np: cycle vector would be too long");

    std::vector<std::vector<Value>> vecs(parties);
    std::vector<int> base(g.players);
    for (int i = 0; i < g.players; ++i)
        base[i] = i;

    for (uint64_t ia = 0; ia < profiles; ++ia) {
        Profile a = g.profile_at(ia);
        for (uint64_t ib = 0; ib < profiles; ++ib) {
            Profile b = g.profile_at(ib);
            std::vector<int> up = base;
            do {
                std::vector<int> down = base;
                do {
                    for (auto& v : vecs)
                        v.push_back(0);
                    Profile cur = a;
                    for (int i : up) {
                        Value before = g.utility(i, cur);
                        cur[i] = b[i];
                        vecs[owner[i]].back() += g.utility(i, cur) - before;
                    }
                    for (int i : down) {
                        Value before = g.utility(i, cur);
                        cur[i] = a[i];
                        vecs[owner[i]].back() += g.utility(i, cur) - before;
                    }
                } while (std::next_permutation(down.begin(), down.end()));
            } while (std::next_permutation(up.begin(), up.end()));
        }
    }

    EqualSumResult eq = fingerprint_equal_sum(vecs, confidence, seed);
    DetectResult out;
    out.exact = eq.sum_is_zero;
    out.cycle_vector_length = vecs[0].size();
    out.transcript = std::move(eq.transcript);
    out.transcript.outcome = out.exact ? "exact-potential" : "not-exact";
    return out;
}

WitnessResult verify_sumls_witness(const SumLSInstance& inst, const VertexCode& v) {
    inst.graph->require(v);
    std::vector<VertexCode> closed{v};
    for (VertexCode& u : inst.graph->neighbors(v))
        closed.push_back(std::move(u));
    int width = bits_for_value_range(inst.value_bound);

    WitnessResult out;
    std::vector<uint64_t> fa_vals, fb_vals;
    for (const VertexCode& u : closed) {
        fa_vals.push_back(static_cast<uint64_t>(inst.f_a(u)));
        fb_vals.push_back(static_cast<uint64_t>(inst.f_b(u)));
    }
    out.transcript.send(0, closed.size() * width, fa_vals, "f_a on closed neighborhood");
    out.transcript.send(1, closed.size() * width, fb_vals, "f_b on closed neighborhood");

    Value sv = inst.sum(v);
    out.accepted = true;
    for (size_t i = 1; i < closed.size(); ++i)
        if (inst.sum(closed[i]) > sv) {
            out.accepted = false;
            out.detail = "improving neighbor " + code_str(closed[i]);
            break;
        }
    out.transcript.outcome = out.accepted ? "accepted" : "rejected";
    return out;
}

WitnessResult verify_totexpot_witness_2p(const std::vector<std::vector<Value>>& ua,
                                         const std::vector<std::vector<Value>>& ub,
                                         const TotExPotWitness& w) {
    const int na = static_cast<int>(ua.size()), nb = static_cast<int>(ua[0].size());
    WitnessResult out;
    if (w.kind == TotExPotWitness::Kind::NashProfile) {
        if (w.profile.size() != 2 || w.profile[0] < 0 || w.profile[0] >= na || w.profile[1] < 0 ||
            w.profile[1] >= nb) {
            out.detail = "malformed profile witness";
            out.transcript.outcome = "rejected";
            return out;
        }
        int a = w.profile[0], b = w.profile[1];
        bool alice_ok = true, bob_ok = true;
        for (int a2 = 0; a2 < na; ++a2)
            alice_ok = alice_ok && ua[a2][b] <= ua[a][b];
        for (int b2 = 0; b2 < nb; ++b2)
            bob_ok = bob_ok && ub[a][b2] <= ub[a][b];
        out.transcript.send(0, 1, {alice_ok ? 1ull : 0ull}, "best-response check");
        out.transcript.send(1, 1, {bob_ok ? 1ull : 0ull}, "best-response check");
        out.accepted = alice_ok && bob_ok;
        if (!out.accepted)
            out.detail = alice_ok ? "column player deviates" : "row player deviates";
    } else if (w.kind == TotExPotWitness::Kind::Cycle2P) {
        auto [a, a2, b, b2] = w.cycle2p;
        if (a < 0 || a2 < 0 || b < 0 || b2 < 0 || a >= na || a2 >= na || b >= nb || b2 >= nb ||
            a == a2 || b == b2) {
            out.detail = "malformed cycle witness";
            out.transcript.outcome = "rejected";
            return out;
        }
        Value max_abs = 1;
        for (const auto& row : ua)
            for (Value x : row)
                max_abs = std::max(max_abs, x < 0 ? -x : x);
        int width = bits_for_value_range(max_abs);
        std::vector<uint64_t> vals = {static_cast<uint64_t>(ua[a][b]), static_cast<uint64_t>(ua[a2][b]),
                                      static_cast<uint64_t>(ua[a2][b2]),
                                      static_cast<uint64_t>(ua[a][b2])};
        out.transcript.send(0, 4 * static_cast<uint64_t>(width), vals, "cycle utilities");
        Value sum = (ua[a2][b] - ua[a][b]) + (ub[a2][b2] - ub[a2][b]) + (ua[a][b2] - ua[a2][b2]) +
                    (ub[a][b] - ub[a][b2]);
        out.transcript.send(1, 1, {sum != 0 ? 1ull : 0ull}, "cycle verdict");
        out.accepted = sum != 0;
        if (!out.accepted)
            out.detail = "cycle sums to zero";
    } else {
        out.detail = "wrong witness kind for a two-player game";
    }
    out.transcript.outcome = out.accepted ? "accepted" : "rejected";
    return out;
}

WitnessResult verify_totexpot_witness_np(const Game& g, const std::vector<int>& owner,
                                         const TotExPotWitness& w) {
    WitnessResult out;
    if (w.kind == TotExPotWitness::Kind::NashProfile) {
        if (static_cast<int>(w.profile.size()) != g.players) {
            out.detail = "malformed profile witness";
            out.transcript.outcome = "rejected";
            return out;
        }
        bool ok[2] = {true, true};
        Profile q = w.profile;
        for (int i = 0; i < g.players; ++i) {
            Value u0 = g.utility(i, w.profile);
            for (int alt = 0; alt < g.actions[i]; ++alt) {
                if (alt == w.profile[i])
                    continue;
                q[i] = alt;
                if (g.utility(i, q) > u0)
                    ok[owner[i]] = false;
            }
            q[i] = w.profile[i];
        }
        out.transcript.send(0, 1, {ok[0] ? 1ull : 0ull}, "best-response check");
        out.transcript.send(1, 1, {ok[1] ? 1ull : 0ull}, "best-response check");
        out.accepted = ok[0] && ok[1];
        if (!out.accepted)
            out.detail = "some player deviates";
    } else if (w.kind == TotExPotWitness::Kind::CycleNP) {
        if (static_cast<int>(w.a.size()) != g.players || w.b.size() != w.a.size() ||
            static_cast<int>(w.pi_up.size()) != g.players ||
            static_cast<int>(w.pi_down.size()) != g.players) {
            out.detail = "malformed cycle witness";
            out.transcript.outcome = "rejected";
            return out;
        }
        // Each party reports the total change its players see along the
        // cycle; the witness is valid iff the changes do not cancel.
        Value contrib[2] = {0, 0};
        Profile cur = w.a;
        for (int i : w.pi_up) {
            Value before = g.utility(i, cur);
            cur[i] = w.b[i];
            contrib[owner[i]] += g.utility(i, cur) - before;
        }
        for (int i : w.pi_down) {
            Value before = g.utility(i, cur);
            cur[i] = w.a[i];
            contrib[owner[i]] += g.utility(i, cur) - before;
        }
        out.transcript.send(0, 64, {static_cast<uint64_t>(contrib[0])}, "cycle contribution");
        out.transcript.send(1, 1, {contrib[0] + contrib[1] != 0 ? 1ull : 0ull}, "cycle verdict");
        out.accepted = contrib[0] + contrib[1] != 0;
        if (!out.accepted)
            out.detail = "cycle sums to zero";
    } else {
        out.detail = "wrong witness kind for an n-player game";
    }
    out.transcript.outcome = out.accepted ? "accepted" : "rejected";
    return out;
}

BaselineResult baseline_full_exchange(const SumLSInstance& inst, uint64_t cap) {
    auto count = inst.graph->vertex_count();
    if (!count || *count > cap)
        throw std::length_error("baseline_full_exchange: instance too large");
    uint64_t n = *count;
    int width = std::max(1, static_cast<int>(std::bit_width(static_cast<uint64_t>(inst.value_bound) - 1)));
    int idx_width = std::max(1, static_cast<int>(std::bit_width(n - 1)));

    BaselineResult out;
    std::vector<uint64_t> values;
    values.reserve(n);
    for (uint64_t i = 0; i < n; ++i)
        values.push_back(static_cast<uint64_t>(inst.f_a(inst.graph->vertex_at(i))));
    out.transcript.send(0, n * static_cast<uint64_t>(width), values, "full f_a table");

    ValueFn sum = [&inst](const VertexCode& v) { return inst.sum(v); };
    for (uint64_t i = 0; i < n; ++i) {
        VertexCode v = inst.graph->vertex_at(i);
        if (is_local_max(*inst.graph, sum, v)) {
            out.solution = v;
            out.transcript.send(1, idx_width, {i}, "announced local maximum");
            out.transcript.outcome = "solved";
            return out;
        }
    }
    throw std::logic_error("baseline_full_exchange: no local maximum found (impossible)");
}

void random_exact_game(int n, Value w, Rng& rng, bool plant_violation,
                       std::vector<std::vector<Value>>& ua, std::vector<std::vector<Value>>& ub) {
    std::vector<std::vector<Value>> phi(n, std::vector<Value>(n));
    std::vector<Value> ga(n), hb(n);
    for (int i = 0; i < n; ++i) {
        ga[i] = rng.range(0, w);
        hb[i] = rng.range(0, w);
        for (int j = 0; j < n; ++j)
            phi[i][j] = rng.range(0, w);
    }
    ua.assign(n, std::vector<Value>(n));
    ub.assign(n, std::vector<Value>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            ua[a][b] = phi[a][b] + ga[b]; // own-action-free terms keep it exact
            ub[a][b] = phi[a][b] + hb[a];
        }
    if (plant_violation)
        ua[rng.below(n)][rng.below(n)] += 1 + rng.range(0, w);
}

} // namespace ccls
