#pragma once

#include <atomic>
#include <functional>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "alckit/alcove.hpp"
#include "alckit/chain_bundle.hpp"
#include "alckit/parahoric.hpp"
#include "alckit/root_system.hpp"
#include "alckit/strata.hpp"
#include "alckit/weyl_reduce.hpp"

namespace alckit {

// ---------------------------------------------------------------------------
// Sweep harness.  All sweeps are exact identity checks or audits over
// enumerable configuration spaces; outputs are deterministic for a fixed
// seed, with worker fan-out writing into an index-addressed collector.
// ---------------------------------------------------------------------------

// Portable bounded integer draw (the engine is seeded, the mapping fixed).
inline long long draw_below(std::mt19937_64& rng, long long n) {
    return (long long)(rng() % (unsigned long long)n);
}

inline Coweight draw_integral_coweight(std::mt19937_64& rng, int rank, long long bound) {
    Coweight w = Coweight::zero(rank);
    for (int i = 0; i < rank; ++i)
        w.coeffs[(std::size_t)i] = Rat(draw_below(rng, 2 * bound + 1) - bound);
    return w;
}

// Runs fn(i) for i in [0, n) on a bounded pool; results land at index i.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn,
                            unsigned workers = 0) {
    std::vector<T> out(n);
    if (n == 0)
        return out;
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 2;
        if (workers > 8)
            workers = 8;
    }
    if (workers == 1 || n == 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = fn(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers && w < n; ++w)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    if (error)
        std::rethrow_exception(error);
    return out;
}

struct CheckResult {
    std::string name;
    bool pass = true;
    long long checked = 0;
    std::vector<std::string> failures;

    CheckResult() = default;
    explicit CheckResult(std::string n) : name(std::move(n)) {}

    void require(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            pass = false;
            if (failures.size() < 32)
                failures.push_back(what);
        }
    }

    void merge(const CheckResult& other) {
        checked += other.checked;
        if (!other.pass)
            pass = false;
        for (const auto& f : other.failures)
            if (failures.size() < 32)
                failures.push_back(f);
    }
};

// All ordered sequences of distinct labels from {0..rank}, lengths 1..rank+1.
inline std::vector<std::vector<int>> admissible_label_sequences(int rank) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::vector<bool> used((std::size_t)rank + 1, false);
    auto rec = [&](auto&& self) -> void {
        if (!cur.empty())
            out.push_back(cur);
        if ((int)cur.size() == rank + 1)
            return;
        for (int i = 0; i <= rank; ++i) {
            if (used[(std::size_t)i])
                continue;
            used[(std::size_t)i] = true;
            cur.push_back(i);
            self(self);
            cur.pop_back();
            used[(std::size_t)i] = false;
        }
    };
    rec(rec);
    return out;
}

inline std::vector<std::vector<int>> all_subsets(int rank) {
    std::vector<std::vector<int>> out;
    int n = rank + 1;
    for (unsigned long long mask = 0; mask < (1ull << n); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < n; ++b)
            if (mask & (1ull << b))
                s.push_back(b);
        out.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Named sweeps
// ---------------------------------------------------------------------------

// <alpha_i, eta_j> = delta_ij / n_i and <theta, eta_j> = 1 for j >= 1.
inline CheckResult pairing_sweep(int max_rank) {
    CheckResult res("pairing");
    for (const LieType& t : all_types_up_to_rank(max_rank)) {
        RootSystem rs = build_root_system(t);
        std::vector<Coweight> v = alcove_vertices(rs);
        for (int i = 1; i <= rs.rank; ++i) {
            std::vector<long long> e((std::size_t)rs.rank, 0);
            e[(std::size_t)(i - 1)] = 1;
            Root ai{e};
            for (int j = 0; j <= rs.rank; ++j) {
                Rat expect = (i == j) ? Rat(1, rs.marks[(std::size_t)(i - 1)]) : Rat(0);
                res.require(pairing(ai, v[(std::size_t)j], rs) == expect,
                            t.name() + ": <alpha_" + std::to_string(i) + ", eta_" +
                                std::to_string(j) + ">");
            }
        }
        for (int j = 0; j <= rs.rank; ++j) {
            Rat expect = j == 0 ? Rat(0) : Rat(1);
            res.require(pairing(rs.highest_root, v[(std::size_t)j], rs) == expect,
                        t.name() + ": <theta, eta_" + std::to_string(j) + ">");
        }
    }
    return res;
}

// k_0 = 1, brute-force minimality of each k_i, k_G = lcm, n_i | k_G.
inline CheckResult orders_sweep(int max_rank) {
    CheckResult res("orders");
    for (const LieType& t : all_types_up_to_rank(max_rank)) {
        RootSystem rs = build_root_system(t);
        AlcoveOrders o = alcove_orders(rs);
        std::vector<Coweight> v = alcove_vertices(rs);
        res.require(o.k_each[0] == 1, t.name() + ": k_0");
        long long lcm = 1;
        for (int i = 0; i <= rs.rank; ++i) {
            long long k = o.k_each[(std::size_t)i];
            lcm = lcm_ll(lcm, k);
            res.require(v[(std::size_t)i].scaled(Rat(k)).is_integral(),
                        t.name() + ": k_" + std::to_string(i) + " integrality");
            bool minimal = true;
            for (long long m = 1; m < k; ++m)
                if (v[(std::size_t)i].scaled(Rat(m)).is_integral())
                    minimal = false;
            res.require(minimal, t.name() + ": k_" + std::to_string(i) + " minimality");
        }
        res.require(o.k_g == lcm, t.name() + ": k_G = lcm(k_i)");
        for (long long n : rs.marks)
            res.require(o.k_g % n == 0, t.name() + ": n_i | k_G");
    }
    return res;
}

// P_I = intersection of vertex parahorics, every subset I, as truncated sets.
inline CheckResult intersection_sweep(int max_rank, int N) {
    CheckResult res("intersection");
    std::vector<LieType> types = all_types_up_to_rank(max_rank);
    std::vector<CheckResult> parts = parallel_map<CheckResult>(
        types.size(), [&](std::size_t ti) {
            CheckResult part("intersection");
            RootSystem rs = build_root_system(types[ti]);
            for (const auto& I : all_subsets(rs.rank)) {
                std::string name = types[ti].name() + ": I size " + std::to_string(I.size());
                part.require(verify_intersection(rs, I, N), name);
            }
            return part;
        });
    for (const CheckResult& p : parts)
        res.merge(p);
    return res;
}

// Alcove reduction: output in alcove, idempotent, coroot-translation
// invariant, and the limit slice-equality across l.
inline CheckResult reduction_sweep(int max_rank, int trials, unsigned long long seed,
                                   int l_max, int slice_trials, int N) {
    CheckResult res("reduction");
    for (const LieType& t : all_types_up_to_rank(max_rank)) {
        RootSystem rs = build_root_system(t);
        std::mt19937_64 rng(seed ^ (unsigned long long)std::hash<std::string>{}(t.name()));
        for (int trial = 0; trial < trials; ++trial) {
            Coweight w = draw_integral_coweight(rng, rs.rank, 12);
            ReductionTrace tr = reduce_to_alcove(rs, w);
            res.require(!alcove_violation(rs, tr.output), t.name() + ": output in alcove");
            res.require(replay_word(rs, tr.input, tr.word) == tr.output,
                        t.name() + ": word replay");
            res.require(reduce_to_alcove(rs, tr.output).word.empty(),
                        t.name() + ": idempotence");
            Coweight shift = draw_integral_coweight(rng, rs.rank, 4);
            res.require(reduce_to_alcove(rs, w + shift).output == tr.output,
                        t.name() + ": translation invariance");
        }
        for (long long l = 1; l <= l_max; ++l) {
            for (int trial = 0; trial < slice_trials; ++trial) {
                Coweight w = draw_integral_coweight(rng, rs.rank, 10);
                bool ok = true;
                std::string why;
                try {
                    GiesekerLimit g = gieseker_limit(rs, l, w, N);
                    ok = face_of(rs, AlcovePoint{reduce_to_alcove(rs, w.scaled(Rat(1, l))).output}) ==
                         g.face;
                } catch (const std::exception& e) {
                    ok = false;
                    why = e.what();
                }
                res.require(ok, t.name() + " l=" + std::to_string(l) +
                                    ": limit slice equality " + why);
            }
        }
    }
    return res;
}

// |d_j| <= k for every ad-decomposition degree over every admissible chain.
inline CheckResult degree_bound_sweep(int max_rank) {
    CheckResult res("degree_bound");
    std::vector<LieType> types = all_types_up_to_rank(max_rank);
    std::vector<CheckResult> parts = parallel_map<CheckResult>(
        types.size(), [&](std::size_t ti) {
            CheckResult part("degree_bound");
            RootSystem rs = build_root_system(types[ti]);
            long long k = alcove_orders(rs).k_g;
            for (const auto& labels : admissible_label_sequences(rs.rank)) {
                TwistedChain chain = make_twisted_chain(rs, k, labels);
                for (const auto& [root, line] : ad_decomposition(rs, chain).root_lines)
                    for (long long d : line.degrees)
                        part.require(d <= k && -d <= k, types[ti].name() + ": |d| <= k");
            }
            return part;
        });
    for (const CheckResult& p : parts)
        res.merge(p);
    return res;
}

// k = 1 classical reduction on one component: dim d+1, twisted max(d-1, 0).
inline CheckResult classical_sweep() {
    CheckResult res("classical");
    RootSystem rs = build_root_system(LieType::parse("A1"));
    TwistedChain chain = make_twisted_chain(rs, 1, {0, 1});
    for (long long d = 0; d <= 10; ++d) {
        EquivLine line = make_equiv_line(1, {Rat(d), Rat(0)});
        long long untw = line_h0(rs, chain, line, paper_model(), false, false).dim;
        long long tw = line_h0(rs, chain, line, paper_model(), true, true).dim;
        res.require(untw == d + 1, "k=1 d=" + std::to_string(d) + " untwisted");
        res.require(tw == (d >= 2 ? d - 1 : 0), "k=1 d=" + std::to_string(d) + " twisted");
    }
    return res;
}

// ev kernel dimension == twisted H^0 total, every configuration, both models.
inline CheckResult selfconsistency_sweep(int max_rank) {
    CheckResult res("ev_selfconsistency");
    std::vector<LieType> types = all_types_up_to_rank(max_rank);
    std::vector<CheckResult> parts = parallel_map<CheckResult>(
        types.size(), [&](std::size_t ti) {
            CheckResult part("ev_selfconsistency");
            RootSystem rs = build_root_system(types[ti]);
            long long k = alcove_orders(rs).k_g;
            for (const auto& labels : admissible_label_sequences(rs.rank)) {
                TwistedChain chain = make_twisted_chain(rs, k, labels);
                for (const EquivModel& model : {paper_model(), unit_model()}) {
                    EvData ev = ev_map(rs, chain, model);
                    ChainH0 tw = chain_h0_adE(rs, chain, model, true);
                    part.require(ev.kernel_dim == tw.total,
                                 types[ti].name() + " " + model.name + ": ev kernel");
                }
            }
            return part;
        });
    for (const CheckResult& p : parts)
        res.merge(p);
    return res;
}

// Orbit combinatorics: counts, Hasse edges, terminal stratum, singleton rule.
inline CheckResult strata_sweep(int max_rank) {
    CheckResult res("strata");
    for (const LieType& t : all_types_up_to_rank(max_rank)) {
        RootSystem rs = build_root_system(t);
        std::vector<OrbitLabel> labs = enumerate_orbits(rs);
        res.require((long long)labs.size() == (1ll << (rs.rank + 1)),
                    t.name() + ": 2^{r+1} orbits");
        auto edges = closure_poset(rs);
        res.require((long long)edges.size() == (long long)(rs.rank + 1) * (1ll << rs.rank),
                    t.name() + ": Hasse edge count");
        std::vector<int> full;
        for (int i = 0; i <= rs.rank; ++i)
            full.push_back(i);
        res.require(labs.back().indices == full, t.name() + ": terminal stratum {0..r}");
        for (const OrbitLabel& I : labs) {
            OrbitReport r = orbit_report(rs, I);
            res.require(r.z0_trivial == (I.indices.size() == 1),
                        t.name() + ": Z_0 triviality flag " + I.str());
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Vanishing audit: the full model-dependent sweep.  Configurations on which
// the two formula dims and the oracle dim all agree are assertion-grade and
// must vanish; everything else is logged with a witness.
// ---------------------------------------------------------------------------

struct VanishingAudit {
    std::vector<ChainRecord> records;
    long long asserted_pass = 0;
    long long asserted_fail = 0;
    long long logged_discrepancies = 0;
};

inline VanishingAudit vanishing_audit(int max_rank, bool both_models = true) {
    VanishingAudit audit;
    struct Config {
        LieType type;
        std::vector<int> labels;
        EquivModel model;
    };
    std::vector<Config> configs;
    for (const LieType& t : all_types_up_to_rank(max_rank))
        for (const auto& labels : admissible_label_sequences(t.rank)) {
            configs.push_back({t, labels, paper_model()});
            if (both_models)
                configs.push_back({t, labels, unit_model()});
        }
    std::vector<ChainRecord> records = parallel_map<ChainRecord>(
        configs.size(), [&](std::size_t i) {
            RootSystem rs = build_root_system(configs[i].type);
            TwistedChain chain =
                make_twisted_chain(rs, alcove_orders(rs).k_g, configs[i].labels);
            return make_chain_record(rs, chain, configs[i].model);
        });
    for (ChainRecord& rec : records) {
        bool all_agree = rec.statement_dim == rec.constructive_dim &&
                         rec.constructive_dim == rec.total_untwisted;
        if (all_agree) {
            if (rec.total_twisted == 0)
                ++audit.asserted_pass;
            else
                ++audit.asserted_fail;
        } else {
            ++audit.logged_discrepancies;
        }
        audit.records.push_back(std::move(rec));
    }
    return audit;
}

} // namespace alckit
