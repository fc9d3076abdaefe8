#include "turanpack/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "turanpack/canonical.hpp"
#include "turanpack/codec.hpp"
#include "turanpack/errors.hpp"

namespace turanpack {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("TURANPACK_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::int64_t raw_host_count(int n, int p) {
    std::int64_t e = binomial(n, p);
    if (e >= 63) throw GuardError("host space exceeds 2^62");
    return std::int64_t{1} << e;
}

void for_each_host_raw(int n, int p, const std::function<void(const Hypergraph&)>& fn, bool force) {
    std::int64_t e = binomial(n, p);
    if (e > 30 && !force) throw GuardError("raw enumeration guard: C(n,p) <= 30 (use force to override)");
    if (e >= 40) throw GuardError("raw enumeration is capped at C(n,p) < 40");
    std::vector<VertexMask> slots;
    for_each_ksubset_lex(n, p, [&](VertexMask m) { slots.push_back(m); });
    Hypergraph h(n, p);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        h.edges.clear();
        for (int i = 0; i < e; ++i)
            if (mask >> i & 1) h.edges.push_back(slots[static_cast<std::size_t>(i)]);
        std::sort(h.edges.begin(), h.edges.end());
        fn(h);
    }
}

// ---------------------------------------------------------------------------
// isomorph-reduced enumeration
// ---------------------------------------------------------------------------

namespace {

struct InvariantKey {
    int edges;
    std::vector<int> degrees;
    bool operator<(const InvariantKey& o) const {
        if (edges != o.edges) return edges < o.edges;
        return degrees < o.degrees;
    }
};

InvariantKey invariant_of(const Hypergraph& h) {
    std::vector<int> deg(static_cast<std::size_t>(h.n), 0);
    for (VertexMask e : h.edges) for_each_vertex(e, [&](int v) { ++deg[static_cast<std::size_t>(v)]; });
    std::sort(deg.begin(), deg.end());
    return {static_cast<int>(h.edges.size()), std::move(deg)};
}

std::vector<std::vector<int>> edge_lists(const Hypergraph& h) {
    std::vector<std::vector<int>> lists;
    lists.reserve(h.edges.size());
    for (VertexMask e : h.edges) lists.push_back(mask_to_vertices(e));
    std::sort(lists.begin(), lists.end());
    return lists;
}

bool canonical_less(const Hypergraph& a, const Hypergraph& b) {
    if (a.n != b.n) return a.n < b.n;
    return edge_lists(a) < edge_lists(b);
}

std::vector<Hypergraph> build_dedup(int n, int p) {
    std::vector<Hypergraph> level;
    level.push_back(Hypergraph(0, p));
    for (int k = 1; k <= n; ++k) {
        std::map<InvariantKey, std::vector<Hypergraph>> classes;
        int slots = static_cast<int>(binomial(k - 1, p - 1));
        std::vector<VertexMask> stubs; // (p-1)-subsets of the old vertices
        for_each_ksubset_lex(k - 1, p - 1, [&](VertexMask m) { stubs.push_back(m); });
        for (const Hypergraph& parent : level) {
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
                Hypergraph cand(k, p);
                cand.edges = parent.edges;
                for (int i = 0; i < slots; ++i)
                    if (mask >> i & 1) cand.edges.push_back(stubs[static_cast<std::size_t>(i)] | bit(k - 1));
                std::sort(cand.edges.begin(), cand.edges.end());
                auto& bucket = classes[invariant_of(cand)];
                bool known = false;
                for (const Hypergraph& rep : bucket)
                    if (isomorphic(rep, cand)) {
                        known = true;
                        break;
                    }
                if (!known) bucket.push_back(std::move(cand));
            }
        }
        level.clear();
        for (auto& [key, bucket] : classes)
            for (auto& rep : bucket) level.push_back(std::move(rep));
    }
    // emit canonical forms in canonical order
    std::vector<Hypergraph> out(level.size());
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < level.size(); i = next.fetch_add(1))
            out[i] = canonical_form(level[i]);
    };
    int workers = std::min<int>(resolve_workers(0), static_cast<int>(level.size()) / 64 + 1);
    if (workers > 1) {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    } else {
        work();
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::map<std::pair<int, int>, std::vector<Hypergraph>> g_dedup_cache;
std::mutex g_dedup_mutex;

} // namespace

std::vector<Hypergraph> enumerate_dedup(int n, int p, bool force) {
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    if (!force && ((p == 2 && n > 8) || (p >= 3 && n > 6)))
        throw GuardError("dedup enumeration guard: n <= 8 for p = 2, n <= 6 for p >= 3");
    if (n > 8) throw GuardError("dedup enumeration is capped at 8 vertices");
    std::lock_guard<std::mutex> lock(g_dedup_mutex);
    auto it = g_dedup_cache.find({n, p});
    if (it == g_dedup_cache.end()) it = g_dedup_cache.emplace(std::make_pair(n, p), build_dedup(n, p)).first;
    return it->second;
}

// ---------------------------------------------------------------------------
// p = 2 raw oracle: pruned DFS over the edge-subset tree
// ---------------------------------------------------------------------------

namespace {

struct RowCliqueOps {
    static bool has_clique(const std::uint32_t* rows, std::uint32_t cand, int k) {
        if (k <= 0) return true;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (has_clique(rows, cand & rows[v], k - 1)) return true;
        }
        return false;
    }

    static std::int64_t count_cliques(const std::uint32_t* rows, std::uint32_t cand, int k) {
        if (k == 0) return 1;
        if (k == 1) return std::popcount(cand);
        std::int64_t total = 0;
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            if (std::popcount(cand & rows[v]) >= k - 1) total += count_cliques(rows, cand & rows[v], k - 1);
        }
        return total;
    }

    static int list_cliques(const std::uint32_t* rows, int n, int r, std::uint32_t* out, int cap) {
        int count = 0;
        std::uint32_t full = n >= 32 ? ~0u : (1u << n) - 1;
        list_rec(rows, full, r, 0u, out, cap, count);
        return count;
    }

    static void list_rec(const std::uint32_t* rows, std::uint32_t cand, int k, std::uint32_t cur, std::uint32_t* out,
                         int cap, int& count) {
        if (k == 0) {
            if (count < cap) out[count] = cur;
            ++count;
            return;
        }
        while (cand) {
            if (std::popcount(cand) < k) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            list_rec(rows, cand & rows[v], k - 1, cur | (1u << v), out, cap, count);
        }
    }

    // t pairwise disjoint r-cliques; cliques listed in lex order so minima
    // are nondecreasing and successive picks can require a larger minimum.
    static bool has_packing(const std::uint32_t* rows, int n, int t, int r) {
        if (static_cast<std::int64_t>(t) * r > n) return false;
        std::uint32_t buf[1024];
        int m = list_cliques(rows, n, r, buf, 1024);
        if (m > 1024) return has_packing_slow(rows, n, t, r);
        return pack_rec(buf, m, 0, -1, 0u, t);
    }

    static bool pack_rec(const std::uint32_t* cl, int m, int idx, int prev_min, std::uint32_t used, int need) {
        if (need == 0) return true;
        for (int i = idx; i < m; ++i) {
            int mn = std::countr_zero(cl[i]);
            if (mn <= prev_min) continue;
            if (cl[i] & used) continue;
            if (pack_rec(cl, m, i + 1, mn, used | cl[i], need - 1)) return true;
        }
        return false;
    }

    static bool has_packing_slow(const std::uint32_t* rows, int n, int t, int r) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rows[u] >> v & 1) g.add_edge(u, v);
        return contains_disjoint_cliques(g, t, r);
    }
};

struct SmallOracleConfig {
    int n = 0, t = 1, r = 2, E = 0;
    int forced = 0; // forced-included rank prefix (universal vertices)
    std::pair<int, int> rank_edge[80];
    bool clique_pattern = false;
    int clique_q = 0;
    const CopyCounter* counter = nullptr;
    const SubsetCodec* codec = nullptr; // non-null when witnesses are collected
    int shard_bits = 0;
    std::int64_t target = -1; // phase 2: collect witnesses attaining this value
    int witness_collect_cap = 4096;
};

struct ShardOutcome {
    std::int64_t best = -1;
    std::int64_t scanned = 0;
    std::int64_t pruned = 0;
    std::vector<std::uint64_t> codes;
};

struct SmallOracleRun {
    const SmallOracleConfig& cfg;
    ShardOutcome out;
    std::uint32_t rows[32] = {};

    explicit SmallOracleRun(const SmallOracleConfig& c) : cfg(c) {}

    bool include(int rank) { // false when the edge completes a tK_r
        auto [i, j] = cfg.rank_edge[rank];
        rows[i] |= 1u << j;
        rows[j] |= 1u << i;
        std::uint32_t common = rows[i] & rows[j];
        bool fresh_clique = cfg.r == 2 || RowCliqueOps::has_clique(rows, common, cfg.r - 2);
        if (fresh_clique && RowCliqueOps::has_packing(rows, cfg.n, cfg.t, cfg.r)) {
            rows[i] &= ~(1u << j);
            rows[j] &= ~(1u << i);
            return false;
        }
        return true;
    }

    void exclude_undo(int) {}
    void include_undo(int rank) {
        auto [i, j] = cfg.rank_edge[rank];
        rows[i] &= ~(1u << j);
        rows[j] &= ~(1u << i);
    }

    void leaf() {
        std::int64_t val;
        if (cfg.clique_pattern) {
            std::uint32_t full = cfg.n >= 32 ? ~0u : (1u << cfg.n) - 1;
            val = RowCliqueOps::count_cliques(rows, full, cfg.clique_q);
        } else {
            val = cfg.counter->count_rows(rows, cfg.n);
        }
        ++out.scanned;
        if (cfg.target < 0) {
            out.best = std::max(out.best, val);
            return;
        }
        if (val == cfg.target && static_cast<int>(out.codes.size()) < cfg.witness_collect_cap) {
            Hypergraph h(cfg.n, 2);
            for (int u = 0; u < cfg.n; ++u)
                for (int v = u + 1; v < cfg.n; ++v)
                    if (rows[u] >> v & 1) h.edges.push_back(bit(u) | bit(v));
            std::sort(h.edges.begin(), h.edges.end());
            out.codes.push_back(canonical_code(h, *cfg.codec));
        }
    }

    void rec(int rank) {
        if (rank == cfg.E) {
            leaf();
            return;
        }
        rec(rank + 1); // exclude first: sparse graphs come first
        if (include(rank)) {
            rec(rank + 1);
            include_undo(rank);
        } else {
            out.pruned += std::int64_t{1} << (cfg.E - 1 - rank);
        }
    }

    // applies forced prefix + shard bits; false when the shard is empty
    bool emplace_prefix(std::uint64_t shard) {
        for (int rank = 0; rank < cfg.forced; ++rank)
            if (!include(rank)) return false; // pre-flighted; defensive
        for (int b = 0; b < cfg.shard_bits; ++b) {
            int rank = cfg.forced + b;
            if (shard >> b & 1) {
                if (!include(rank)) {
                    out.pruned += std::int64_t{1} << (cfg.E - cfg.forced - cfg.shard_bits);
                    return false;
                }
            }
        }
        return true;
    }
};

void run_sharded(const SmallOracleConfig& cfg, std::vector<ShardOutcome>& outcomes, int workers) {
    const std::int64_t shards = std::int64_t{1} << cfg.shard_bits;
    outcomes.assign(static_cast<std::size_t>(shards), {});
    std::atomic<std::int64_t> next{0};
    auto work = [&]() {
        for (std::int64_t s = next.fetch_add(1); s < shards; s = next.fetch_add(1)) {
            SmallOracleRun run(cfg);
            if (run.emplace_prefix(static_cast<std::uint64_t>(s))) run.rec(cfg.forced + cfg.shard_bits);
            outcomes[static_cast<std::size_t>(s)] = std::move(run.out);
        }
    };
    workers = std::min<int>(workers, static_cast<int>(shards));
    if (workers > 1) {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    } else {
        work();
    }
}

// Witness assembly shared by all oracle paths: decode, dedupe, canonical
// order, cap.
void finish_witnesses(OracleResult& result, std::vector<std::uint64_t>& codes, const SubsetCodec& codec, int cap) {
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Hypergraph> forms;
    forms.reserve(codes.size());
    for (std::uint64_t c : codes) forms.push_back(codec.decode(c));
    std::sort(forms.begin(), forms.end(), canonical_less);
    if (static_cast<int>(forms.size()) > cap) forms.resize(static_cast<std::size_t>(cap));
    result.witnesses = std::move(forms);
}

OracleResult oracle_p2_raw(int n, const Hypergraph& pattern, int t, int r, HostConstraint constraint,
                           OracleLimits limits) {
    SmallOracleConfig cfg;
    cfg.n = n;
    cfg.t = t;
    cfg.r = r;
    int rank = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) cfg.rank_edge[rank++] = {i, j};
    cfg.E = rank;
    // edges incident to the first k vertices form a rank prefix in this order
    int k = constraint.min_universal;
    if (k > n) throw std::invalid_argument("more universal vertices than vertices");
    cfg.forced = 0;
    for (int i = 0; i < cfg.E; ++i)
        if (cfg.rank_edge[i].first < k) ++cfg.forced;

    Graph pat_g = hypergraph_to_graph(pattern);
    cfg.clique_q = pattern.n;
    cfg.clique_pattern =
        pattern.edge_count() == binomial(pattern.n, 2); // complete pattern counts as cliques
    CopyCounter counter(pattern);
    if (!cfg.clique_pattern) cfg.counter = &counter;

    cfg.shard_bits = std::clamp(cfg.E - cfg.forced - 8, 0, 10);
    int workers = resolve_workers(limits.workers);

    if (cfg.forced > 0) { // fail on an unsatisfiable constraint before spawning workers
        SmallOracleRun probe(cfg);
        for (int rk = 0; rk < cfg.forced; ++rk)
            if (!probe.include(rk)) throw Error("constraint graph already contains tK_r");
    }

    auto t0 = std::chrono::steady_clock::now();
    std::vector<ShardOutcome> outcomes;
    run_sharded(cfg, outcomes, workers);

    OracleResult result;
    result.value = -1;
    for (const auto& o : outcomes) {
        result.value = std::max(result.value, o.best);
        result.scanned += o.scanned;
        result.pruned += o.pruned;
    }

    if (n <= 8 && limits.witness_cap > 0) { // phase 2: collect extremal hosts
        SubsetCodec codec(n, 2);
        cfg.codec = &codec;
        cfg.target = result.value;
        std::vector<ShardOutcome> wit;
        run_sharded(cfg, wit, workers);
        std::vector<std::uint64_t> codes;
        for (auto& o : wit) codes.insert(codes.end(), o.codes.begin(), o.codes.end());
        finish_witnesses(result, codes, codec, limits.witness_cap);
    }
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

// ---------------------------------------------------------------------------
// p >= 3 raw oracle: direct loop over edge subsets
// ---------------------------------------------------------------------------

struct HyperTables {
    int n, p, E;
    std::vector<VertexMask> slot_vertices;   // edge id -> vertex mask
    std::vector<std::uint64_t> rsub_need;    // r-subset -> required edge ids
    std::vector<std::uint32_t> rsub_vs;      // r-subset -> vertex mask
    std::vector<std::uint64_t> qsub_need;    // pattern-clique subsets
    std::unordered_map<VertexMask, int> slot_id;

    HyperTables(int n_, int p_, int r, int q, bool clique_pattern) : n(n_), p(p_) {
        for_each_ksubset_lex(n, p, [&](VertexMask m) {
            slot_id[m] = static_cast<int>(slot_vertices.size());
            slot_vertices.push_back(m);
        });
        E = static_cast<int>(slot_vertices.size());
        for_each_ksubset_lex(n, r, [&](VertexMask m) {
            std::uint64_t need = 0;
            for_each_sub(m, [&](VertexMask sub) { need |= std::uint64_t{1} << slot_id[sub]; });
            rsub_need.push_back(need);
            rsub_vs.push_back(static_cast<std::uint32_t>(m));
        });
        if (clique_pattern && q >= p) {
            for_each_ksubset_lex(n, q, [&](VertexMask m) {
                std::uint64_t need = 0;
                for_each_sub(m, [&](VertexMask sub) { need |= std::uint64_t{1} << slot_id[sub]; });
                qsub_need.push_back(need);
            });
        }
    }

    template <typename F>
    void for_each_sub(VertexMask m, F&& f) {
        auto vs = mask_to_vertices(m);
        for_each_ksubset_lex(static_cast<int>(vs.size()), p, [&](VertexMask idxs) {
            VertexMask sub = 0;
            for_each_vertex(idxs, [&](int i) { sub |= bit(vs[static_cast<std::size_t>(i)]); });
            f(sub);
        });
    }
};

bool hyper_mask_free(const HyperTables& tab, std::uint64_t mask, int t) {
    std::uint32_t complete[64];
    int m = 0;
    for (std::size_t i = 0; i < tab.rsub_need.size(); ++i)
        if ((mask & tab.rsub_need[i]) == tab.rsub_need[i]) {
            if (m >= 64) throw std::logic_error("complete r-subset buffer overflow");
            complete[m++] = tab.rsub_vs[i];
        }
    return !RowCliqueOps::pack_rec(complete, m, 0, -1, 0u, t);
}

OracleResult oracle_hyper_raw(int n, const Hypergraph& pattern, int t, int r, OracleLimits limits) {
    const int p = pattern.p;
    bool clique_pattern = pattern.edge_count() == binomial(pattern.n, p) ||
                          pattern.n < p; // few vertices: every subset is complete
    HyperTables tab(n, p, r, pattern.n, clique_pattern);
    if (tab.E > 30 && !limits.force) throw GuardError("raw enumeration guard: C(n,p) <= 30 (use force to override)");
    if (tab.E >= 40) throw GuardError("raw enumeration is capped at C(n,p) < 40");

    CopyCounter counter(pattern);
    const std::uint64_t total = std::uint64_t{1} << tab.E;
    const int shard_bits = std::clamp(tab.E - 12, 0, 8);
    const std::uint64_t shards = std::uint64_t{1} << shard_bits;
    const std::uint64_t per = total >> shard_bits;

    struct HOutcome {
        std::int64_t best = -1;
        std::int64_t scanned = 0;
        std::vector<std::uint64_t> hits;
    };

    auto eval = [&](std::uint64_t mask, Hypergraph& scratch) -> std::int64_t {
        if (clique_pattern) {
            if (pattern.n < p) return binomial(n, pattern.n); // vacuous condition
            std::int64_t c = 0;
            for (std::uint64_t need : tab.qsub_need)
                if ((mask & need) == need) ++c;
            return c;
        }
        scratch.edges.clear();
        for (int i = 0; i < tab.E; ++i)
            if (mask >> i & 1) scratch.edges.push_back(tab.slot_vertices[static_cast<std::size_t>(i)]);
        return counter.count(scratch);
    };

    auto t0 = std::chrono::steady_clock::now();
    std::vector<HOutcome> outcomes(shards);
    auto phase = [&](std::int64_t target) {
        std::atomic<std::uint64_t> next{0};
        auto work = [&]() {
            Hypergraph scratch(n, p);
            for (std::uint64_t s = next.fetch_add(1); s < shards; s = next.fetch_add(1)) {
                HOutcome& o = outcomes[static_cast<std::size_t>(s)];
                for (std::uint64_t mask = s * per; mask < (s + 1) * per; ++mask) {
                    if (!hyper_mask_free(tab, mask, t)) continue;
                    std::int64_t val = eval(mask, scratch);
                    if (target < 0) {
                        ++o.scanned;
                        o.best = std::max(o.best, val);
                    } else if (val == target && o.hits.size() < 4096) {
                        o.hits.push_back(mask);
                    }
                }
            }
        };
        int workers = std::min<int>(resolve_workers(limits.workers), static_cast<int>(shards));
        if (workers > 1) {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        } else {
            work();
        }
    };

    phase(-1);
    OracleResult result;
    result.value = -1;
    for (auto& o : outcomes) {
        result.value = std::max(result.value, o.best);
        result.scanned += o.scanned;
    }
    result.pruned = static_cast<std::int64_t>(total) - result.scanned;

    if (limits.witness_cap > 0) {
        for (auto& o : outcomes) o.hits.clear();
        phase(result.value);
        SubsetCodec codec(n, p);
        std::vector<std::uint64_t> codes;
        Hypergraph scratch(n, p);
        for (auto& o : outcomes)
            for (std::uint64_t mask : o.hits) {
                scratch.edges.clear();
                for (int i = 0; i < tab.E; ++i)
                    if (mask >> i & 1) scratch.edges.push_back(tab.slot_vertices[static_cast<std::size_t>(i)]);
                codes.push_back(canonical_code(scratch, codec));
            }
        finish_witnesses(result, codes, codec, limits.witness_cap);
    }
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

int universal_vertex_count(const Hypergraph& h) {
    // p = 2 notion: degree n-1
    Graph g = hypergraph_to_graph(h);
    int c = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == g.order() - 1) ++c;
    return c;
}

OracleResult oracle_dedup(int n, const Hypergraph& pattern, int t, int r, HostConstraint constraint,
                          OracleLimits limits) {
    auto t0 = std::chrono::steady_clock::now();
    auto reps = enumerate_dedup(n, pattern.p, limits.force);
    CopyCounter counter(pattern);
    OracleResult result;
    result.value = -1;
    std::vector<const Hypergraph*> best_hosts;
    for (const Hypergraph& rep : reps) {
        if (constraint.min_universal > 0 && universal_vertex_count(rep) < constraint.min_universal) continue;
        if (contains_disjoint_cliques(rep, t, r)) continue;
        std::int64_t val = counter.count(rep);
        ++result.scanned;
        if (val > result.value) {
            result.value = val;
            best_hosts.clear();
        }
        if (val == result.value) best_hosts.push_back(&rep);
    }
    result.pruned = static_cast<std::int64_t>(reps.size()) - result.scanned;
    std::vector<Hypergraph> forms;
    for (const Hypergraph* h : best_hosts) forms.push_back(*h); // reps are canonical already
    std::sort(forms.begin(), forms.end(), canonical_less);
    if (static_cast<int>(forms.size()) > limits.witness_cap) forms.resize(static_cast<std::size_t>(limits.witness_cap));
    result.witnesses = std::move(forms);
    result.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

} // namespace

OracleResult brute_force_ex(int n, const Hypergraph& pattern, int t, int r, EnumMode mode, HostConstraint constraint,
                            OracleLimits limits) {
    pattern.validate();
    if (n < 0 || n > 64) throw std::invalid_argument("host order must be in [0,64]");
    if (t < 1) throw std::invalid_argument("t must be at least 1");
    if (r < pattern.p) throw std::invalid_argument("r must be at least the uniformity");
    if (constraint.min_universal > 0 && pattern.p != 2)
        throw std::invalid_argument("universal-vertex constraints are a p = 2 notion");

    if (mode == EnumMode::dedup) return oracle_dedup(n, pattern, t, r, constraint, limits);
    if (pattern.p == 2) {
        std::int64_t e = binomial(n, 2);
        if (e > 30 && !limits.force) throw GuardError("raw enumeration guard: C(n,p) <= 30 (use force to override)");
        if (n > 10) throw GuardError("p = 2 raw search is capped at 10 vertices");
        return oracle_p2_raw(n, pattern, t, r, constraint, limits);
    }
    return oracle_hyper_raw(n, pattern, t, r, limits);
}

// ---------------------------------------------------------------------------
// generalized-Turan tail search
// ---------------------------------------------------------------------------

namespace {

// Branch and bound over K_{x+1}^p-free hosts, maximizing the K_x^p count.
// possible() tracks x-subsets none of whose required edges were excluded;
// it upper-bounds any completion of the current branch.
struct TailSearch {
    int E;
    std::vector<std::uint64_t> bad_need;    // (x+1)-subsets: required edge ids
    std::vector<std::uint64_t> good_need;   // x-subsets
    std::vector<std::vector<int>> good_with_edge, bad_with_edge;
    std::vector<char> good_possible, good_present;
    std::uint64_t mask = 0;
    int present = 0, possible = 0;
    int best = -1;
    std::uint64_t best_mask = 0;

    void rec(int e) {
        if (possible <= best) return; // cannot beat the incumbent
        if (e == E) {
            if (present > best) {
                best = present;
                best_mask = mask;
            }
            return;
        }
        // include e unless it completes a forbidden clique
        bool completes = false;
        for (int b : bad_with_edge[static_cast<std::size_t>(e)]) {
            std::uint64_t need = bad_need[static_cast<std::size_t>(b)];
            if (((mask | (std::uint64_t{1} << e)) & need) == need) {
                completes = true;
                break;
            }
        }
        if (!completes) {
            mask |= std::uint64_t{1} << e;
            std::vector<int> turned;
            for (int gidx : good_with_edge[static_cast<std::size_t>(e)]) {
                std::uint64_t need = good_need[static_cast<std::size_t>(gidx)];
                if (!good_present[static_cast<std::size_t>(gidx)] && (mask & need) == need) {
                    good_present[static_cast<std::size_t>(gidx)] = 1;
                    turned.push_back(gidx);
                }
            }
            present += static_cast<int>(turned.size());
            rec(e + 1);
            present -= static_cast<int>(turned.size());
            for (int gidx : turned) good_present[static_cast<std::size_t>(gidx)] = 0;
            mask &= ~(std::uint64_t{1} << e);
        }
        // exclude e: x-subsets needing it become impossible
        std::vector<int> killed;
        for (int gidx : good_with_edge[static_cast<std::size_t>(e)]) {
            if (good_possible[static_cast<std::size_t>(gidx)]) {
                good_possible[static_cast<std::size_t>(gidx)] = 0;
                killed.push_back(gidx);
            }
        }
        possible -= static_cast<int>(killed.size());
        rec(e + 1);
        possible += static_cast<int>(killed.size());
        for (int gidx : killed) good_possible[static_cast<std::size_t>(gidx)] = 1;
    }
};

} // namespace

Hypergraph search_tail_t(int m, int x, int p, OracleLimits limits) {
    if (m < 0 || x < 0) throw std::invalid_argument("tail parameters must be nonnegative");
    if (p == 2) return graph_to_hypergraph(make_turan(m, x));
    if (x + 1 < p) {
        // a K_{x+1}^p-free p-graph needs every (x+1)-subset absent, which is
        // vacuously violated once m > x; only the edgeless tiny tail exists
        if (m > x) throw GuardError("no K_{x+1}^p-free p-graph exists on more than x vertices when x+1 < p");
        return Hypergraph(m, p);
    }
    std::int64_t e = binomial(m, p);
    if (!limits.force && (m > 7 || e > 35)) throw GuardError("tail search guard: m <= 7 and C(m,p) <= 35");
    if (e >= 62) throw GuardError("tail search is capped at C(m,p) < 62");

    std::vector<VertexMask> slots;
    std::unordered_map<VertexMask, int> slot_id;
    for_each_ksubset_lex(m, p, [&](VertexMask mm) {
        slot_id[mm] = static_cast<int>(slots.size());
        slots.push_back(mm);
    });

    TailSearch srch;
    srch.E = static_cast<int>(slots.size());
    auto needs_of = [&](VertexMask set) {
        std::uint64_t need = 0;
        auto vs = mask_to_vertices(set);
        for_each_ksubset_lex(static_cast<int>(vs.size()), p, [&](VertexMask idxs) {
            VertexMask sub = 0;
            for_each_vertex(idxs, [&](int i) { sub |= bit(vs[static_cast<std::size_t>(i)]); });
            need |= std::uint64_t{1} << slot_id[sub];
        });
        return need;
    };
    for_each_ksubset_lex(m, x + 1, [&](VertexMask set) { srch.bad_need.push_back(needs_of(set)); });
    for_each_ksubset_lex(m, x, [&](VertexMask set) { srch.good_need.push_back(needs_of(set)); });
    srch.good_with_edge.assign(static_cast<std::size_t>(srch.E), {});
    srch.bad_with_edge.assign(static_cast<std::size_t>(srch.E), {});
    for (std::size_t i = 0; i < srch.good_need.size(); ++i)
        for (int eidx = 0; eidx < srch.E; ++eidx)
            if (srch.good_need[i] >> eidx & 1) srch.good_with_edge[static_cast<std::size_t>(eidx)].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < srch.bad_need.size(); ++i)
        for (int eidx = 0; eidx < srch.E; ++eidx)
            if (srch.bad_need[i] >> eidx & 1) srch.bad_with_edge[static_cast<std::size_t>(eidx)].push_back(static_cast<int>(i));
    srch.good_possible.assign(srch.good_need.size(), 1);
    srch.good_present.assign(srch.good_need.size(), 0);
    srch.possible = static_cast<int>(srch.good_need.size());
    srch.rec(0);

    Hypergraph tail(m, p);
    for (int i = 0; i < srch.E; ++i)
        if (srch.best_mask >> i & 1) tail.edges.push_back(slots[static_cast<std::size_t>(i)]);
    std::sort(tail.edges.begin(), tail.edges.end());
    return tail;
}

TailSupplier oracle_tail_supplier(OracleLimits limits) {
    return [limits](int m, int x, int p) { return search_tail_t(m, x, p, limits); };
}

// ---------------------------------------------------------------------------
// theorem probes
// ---------------------------------------------------------------------------

Theorem1Report verify_theorem1(int n_lo, int n_hi, int s, int r, int t, OracleLimits limits) {
    if (n_lo > n_hi) throw std::invalid_argument("empty range");
    Theorem1Report report;
    report.s = s;
    report.r = r;
    report.t = t;
    Hypergraph pattern = graph_to_hypergraph(Graph::complete(s));
    for (int n = n_lo; n <= n_hi; ++n) {
        OracleResult res = brute_force_ex(n, pattern, t, r, EnumMode::raw, {}, limits);
        std::int64_t formula = ex_closed_value({n, s, r, t, 2});
        Theorem1Row row;
        row.n = n;
        row.oracle_value = res.value;
        row.formula_value = formula;
        row.equal = res.value == formula;
        if (!res.witnesses.empty()) row.witness = to_graph6(hypergraph_to_graph(res.witnesses.front()));
        if (res.value < formula) report.lower_bound_ok = false;
        report.rows.push_back(std::move(row));
    }
    for (auto it = report.rows.rbegin(); it != report.rows.rend(); ++it) {
        if (!it->equal) break;
        report.equality_onset = it->n;
    }
    return report;
}

bool verify_universal_vertices(int n, const Hypergraph& pattern, int t, int r, OracleLimits limits) {
    if (pattern.p != 2) throw std::invalid_argument("universal-vertex probe is a p = 2 notion");
    if (t < 2) throw std::invalid_argument("universal-vertex probe requires t >= 2");
    if (count_cliques(pattern, r) > 0) throw std::invalid_argument("pattern contains K_r");
    OracleResult unconstrained = brute_force_ex(n, pattern, t, r, EnumMode::raw, {}, limits);
    OracleResult constrained = brute_force_ex(n, pattern, t, r, EnumMode::raw, {t - 1}, limits);
    return unconstrained.value == constrained.value;
}

} // namespace turanpack
