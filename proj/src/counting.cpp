#include "turanpack/counting.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turanpack/errors.hpp"

namespace turanpack {

namespace {

// Clique DFS over multiword candidate rows. `out` collects vertex masks and
// requires order <= 64.
struct GraphCliqueDFS {
    const Graph& g;
    int q, W;
    std::int64_t count = 0;
    std::vector<VertexMask>* out;
    std::vector<std::uint64_t> arena;
    VertexMask cur = 0;

    GraphCliqueDFS(const Graph& g_, int q_, std::vector<VertexMask>* out_)
        : g(g_), q(q_), W(g_.words()), out(out_), arena(static_cast<std::size_t>(std::max(1, q_)) * W) {}

    void run() {
        if (q == 0) {
            ++count;
            if (out) out->push_back(0);
            return;
        }
        std::vector<std::uint64_t> top(static_cast<std::size_t>(W));
        for (int w = 0; w < W; ++w) top[static_cast<std::size_t>(w)] = ~std::uint64_t{0};
        int rem = g.order() % 64;
        if (g.order() == 0) top.assign(static_cast<std::size_t>(W), 0);
        else if (rem) top[static_cast<std::size_t>(W - 1)] = (std::uint64_t{1} << rem) - 1;
        rec(0, top.data());
    }

    void rec(int level, std::uint64_t* cand) {
        int avail = 0;
        for (int w = 0; w < W; ++w) avail += std::popcount(cand[w]);
        if (avail < q - level) return;
        std::uint64_t* next = arena.data() + static_cast<std::size_t>(level) * W;
        for (int w = 0; w < W; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                int v = w * 64 + b;
                cand[w] &= ~(std::uint64_t{1} << b);
                if (level + 1 == q) {
                    ++count;
                    if (out) out->push_back(cur | bit(v));
                    continue;
                }
                auto row = g.row(v);
                bool any = false;
                for (int x = 0; x < W; ++x) {
                    next[x] = cand[x] & row[static_cast<std::size_t>(x)];
                    if (x < w) next[x] = 0;
                    any |= next[x] != 0;
                }
                // bits below the current word position were cleared above
                if (!any && q - level > 1) continue;
                if (out) cur |= bit(v);
                rec(level + 1, next);
                if (out) cur &= ~bit(v);
            }
        }
    }
};

} // namespace

std::int64_t count_cliques(const Graph& g, int q) {
    if (q < 0) throw std::invalid_argument("clique order must be nonnegative");
    GraphCliqueDFS dfs(g, q, nullptr);
    dfs.run();
    return dfs.count;
}

CliqueFamily list_cliques(const Graph& g, int q) {
    if (q < 0) throw std::invalid_argument("clique order must be nonnegative");
    if (g.order() > 64) throw GuardError("clique listing supports at most 64 vertices");
    CliqueFamily fam{g.order(), q, {}};
    GraphCliqueDFS dfs(g, q, &fam.sets);
    dfs.run();
    return fam;
}

namespace {

// Hypergraph clique DFS via completion masks: for a (p-1)-subset T,
// completion[T] is the set of vertices v with T+v an edge. A vertex may
// join the current set S iff it lies in completion[T'] for every (p-1)-
// subset T' of S.
struct HyperCliqueDFS {
    const Hypergraph& h;
    int q;
    std::unordered_map<VertexMask, VertexMask> completion;
    std::int64_t count = 0;
    std::vector<VertexMask>* out;
    std::vector<int> chosen;

    HyperCliqueDFS(const Hypergraph& h_, int q_, std::vector<VertexMask>* out_) : h(h_), q(q_), out(out_) {
        for (VertexMask e : h.edges)
            for_each_vertex(e, [&](int v) { completion[e & ~bit(v)] |= bit(v); });
    }

    VertexMask constrain(VertexMask cand, int v) const {
        // intersect with completions of every (p-2)-subset of `chosen` + v
        int need = h.p - 2;
        if (static_cast<int>(chosen.size()) < need) return cand;
        std::vector<int> idx(static_cast<std::size_t>(need));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            VertexMask key = bit(v);
            for (int i : idx) key |= bit(chosen[static_cast<std::size_t>(i)]);
            auto it = completion.find(key);
            cand &= it == completion.end() ? 0 : it->second;
            if (!cand || need == 0) break;
            int i = need - 1;
            int m = static_cast<int>(chosen.size());
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - need + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < need; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
        return cand;
    }

    void rec(VertexMask cand, VertexMask cur) {
        if (static_cast<int>(chosen.size()) == q) {
            ++count;
            if (out) out->push_back(cur);
            return;
        }
        if (popcount(cand) < q - static_cast<int>(chosen.size())) return;
        VertexMask local = cand;
        while (local) {
            int v = lowest_vertex(local);
            local &= local - 1;
            VertexMask next = constrain(local, v);
            chosen.push_back(v);
            rec(next, cur | bit(v));
            chosen.pop_back();
        }
    }

    void run() {
        if (q == 0) {
            ++count;
            if (out) out->push_back(0);
            return;
        }
        rec(full_mask(h.n), 0);
    }
};

} // namespace

std::int64_t count_cliques(const Hypergraph& h, int q) {
    if (q < 0) throw std::invalid_argument("clique order must be nonnegative");
    if (h.p == 2) return count_cliques(hypergraph_to_graph(h), q);
    HyperCliqueDFS dfs(h, q, nullptr);
    dfs.run();
    return dfs.count;
}

CliqueFamily list_cliques(const Hypergraph& h, int q) {
    if (q < 0) throw std::invalid_argument("clique order must be nonnegative");
    if (h.p == 2) return list_cliques(hypergraph_to_graph(h), q);
    CliqueFamily fam{h.n, q, {}};
    HyperCliqueDFS dfs(h, q, &fam.sets);
    dfs.run();
    return fam;
}

std::int64_t automorphism_count(const Hypergraph& h) {
    if (h.n > 10) throw GuardError("automorphism count supports at most 10 vertices");
    std::vector<int> perm(static_cast<std::size_t>(h.n));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t count = 0;
    do {
        bool ok = true;
        for (VertexMask e : h.edges) {
            VertexMask pe = 0;
            for_each_vertex(e, [&](int v) { pe |= bit(perm[static_cast<std::size_t>(v)]); });
            if (!h.has_edge(pe)) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

std::int64_t automorphism_count(const Graph& g) { return automorphism_count(graph_to_hypergraph(g)); }

namespace {

struct PackingDFS {
    const std::vector<VertexMask>& sets;
    int t;
    std::vector<int> suffix_distinct_min; // distinct minima from index i on
    std::vector<VertexMask> picked;
    bool found = false;

    PackingDFS(const std::vector<VertexMask>& sets_, int t_) : sets(sets_), t(t_) {
        suffix_distinct_min.assign(sets.size() + 1, 0);
        // minima are nondecreasing in lex order, so group counting is a scan
        std::vector<int> mins(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) mins[i] = lowest_vertex(sets[i]);
        int distinct = 0;
        int last = -1;
        std::vector<int> fwd(sets.size());
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (mins[i] != last) {
                ++distinct;
                last = mins[i];
            }
            fwd[i] = distinct;
        }
        int total = distinct;
        for (std::size_t i = 0; i < sets.size(); ++i)
            suffix_distinct_min[i] = total - fwd[i] + 1; // groups from i's group on
        suffix_distinct_min[sets.size()] = 0;
    }

    bool rec(std::size_t idx, int prev_min, VertexMask used) {
        if (static_cast<int>(picked.size()) == t) {
            found = true;
            return true;
        }
        for (std::size_t i = idx; i < sets.size(); ++i) {
            int mn = lowest_vertex(sets[i]);
            if (mn <= prev_min) continue;
            if (suffix_distinct_min[i] < t - static_cast<int>(picked.size())) return false;
            if (sets[i] & used) continue;
            picked.push_back(sets[i]);
            if (rec(i + 1, mn, used | sets[i])) return true;
            picked.pop_back();
        }
        return false;
    }
};

} // namespace

PackingSearch find_disjoint_cliques(const Hypergraph& h, int t, int r) {
    if (t < 1) throw std::invalid_argument("packing size must be at least 1");
    if (r < h.p) throw std::invalid_argument("clique order must be at least the uniformity");
    PackingSearch res;
    if (static_cast<std::int64_t>(t) * r > h.n) return res;
    CliqueFamily fam = list_cliques(h, r);
    PackingDFS dfs(fam.sets, t);
    dfs.rec(0, -1, 0);
    res.found = dfs.found;
    res.witness = std::move(dfs.picked);
    return res;
}

PackingSearch find_disjoint_cliques(const Graph& g, int t, int r) {
    if (t < 1) throw std::invalid_argument("packing size must be at least 1");
    if (r < 2) throw std::invalid_argument("clique order must be at least 2");
    PackingSearch res;
    if (static_cast<std::int64_t>(t) * r > g.order()) return res;
    CliqueFamily fam = list_cliques(g, r);
    PackingDFS dfs(fam.sets, t);
    dfs.rec(0, -1, 0);
    res.found = dfs.found;
    res.witness = std::move(dfs.picked);
    return res;
}

bool contains_disjoint_cliques(const Hypergraph& h, int t, int r) { return find_disjoint_cliques(h, t, r).found; }
bool contains_disjoint_cliques(const Graph& g, int t, int r) { return find_disjoint_cliques(g, t, r).found; }

CopyCounter::CopyCounter(Hypergraph pattern) : pat_(std::move(pattern)), k_(pat_.n) {
    if (pat_.n > 10) throw GuardError("patterns are capped at 10 vertices");
    pat_.validate();

    std::vector<int> deg(static_cast<std::size_t>(k_), 0);
    for (VertexMask e : pat_.edges) for_each_vertex(e, [&](int v) { ++deg[static_cast<std::size_t>(v)]; });
    order_.resize(static_cast<std::size_t>(k_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int a, int b) { return deg[static_cast<std::size_t>(a)] > deg[static_cast<std::size_t>(b)]; });
    std::vector<int> pos(static_cast<std::size_t>(k_));
    for (int i = 0; i < k_; ++i) pos[static_cast<std::size_t>(order_[static_cast<std::size_t>(i)])] = i;

    sched_.assign(static_cast<std::size_t>(std::max(1, k_)), {});
    adj_before_.assign(static_cast<std::size_t>(std::max(1, k_)), 0);
    for (VertexMask e : pat_.edges) {
        std::vector<int> ps;
        for_each_vertex(e, [&](int v) { ps.push_back(pos[static_cast<std::size_t>(v)]); });
        int mx = *std::max_element(ps.begin(), ps.end());
        sched_[static_cast<std::size_t>(mx)].push_back(ps);
        if (pat_.p == 2) {
            int other = ps[0] == mx ? ps[1] : ps[0];
            adj_before_[static_cast<std::size_t>(mx)] |= bit(other);
        }
    }
    aut_ = automorphism_count(pat_);
}

namespace {

struct HyperMapDFS {
    const Hypergraph& host;
    const std::vector<std::vector<std::vector<int>>>& sched;
    int k;
    std::vector<int> assign;
    std::int64_t leaves = 0;

    void rec(int level, VertexMask used) {
        if (level == k) {
            ++leaves;
            return;
        }
        for (int v = 0; v < host.n; ++v) {
            if (used & bit(v)) continue;
            assign[static_cast<std::size_t>(level)] = v;
            bool ok = true;
            for (const auto& e : sched[static_cast<std::size_t>(level)]) {
                VertexMask img = 0;
                for (int p : e) img |= bit(assign[static_cast<std::size_t>(p)]);
                if (!host.has_edge(img)) {
                    ok = false;
                    break;
                }
            }
            if (ok) rec(level + 1, used | bit(v));
        }
    }
};

struct GraphMapDFS {
    const Graph& host;
    const std::vector<VertexMask>& adj_before;
    int k;
    std::vector<int> assign;
    std::int64_t leaves = 0;

    void rec(int level, VertexMask used) {
        if (level == k) {
            ++leaves;
            return;
        }
        for (int v = 0; v < host.order(); ++v) {
            if (used & bit(v)) continue;
            bool ok = true;
            VertexMask req = adj_before[static_cast<std::size_t>(level)];
            while (ok && req) {
                int p = lowest_vertex(req);
                req &= req - 1;
                ok = host.has_edge(assign[static_cast<std::size_t>(p)], v);
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(level)] = v;
            rec(level + 1, used | bit(v));
        }
    }
};

// Same search for hosts beyond 64 vertices (no vertex masks).
struct BigGraphMapDFS {
    const Graph& host;
    const std::vector<VertexMask>& adj_before;
    int k;
    std::vector<int> assign;
    std::vector<char> used;
    std::int64_t leaves = 0;

    void rec(int level) {
        if (level == k) {
            ++leaves;
            return;
        }
        for (int v = 0; v < host.order(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            bool ok = true;
            VertexMask req = adj_before[static_cast<std::size_t>(level)];
            while (ok && req) {
                int p = lowest_vertex(req);
                req &= req - 1;
                ok = host.has_edge(assign[static_cast<std::size_t>(p)], v);
            }
            if (!ok) continue;
            assign[static_cast<std::size_t>(level)] = v;
            used[static_cast<std::size_t>(v)] = 1;
            rec(level + 1);
            used[static_cast<std::size_t>(v)] = 0;
        }
    }
};

} // namespace

std::int64_t CopyCounter::injective_maps(const Hypergraph& host) const {
    if (host.p != pat_.p) throw std::invalid_argument("uniformity mismatch between pattern and host");
    if (pat_.p == 2) return injective_maps(hypergraph_to_graph(host));
    if (k_ > host.n) return 0;
    HyperMapDFS dfs{host, sched_, k_, std::vector<int>(static_cast<std::size_t>(k_)), 0};
    dfs.rec(0, 0);
    return dfs.leaves;
}

std::int64_t CopyCounter::injective_maps(const Graph& host) const {
    if (pat_.p != 2) throw std::invalid_argument("graph hosts require a 2-uniform pattern");
    if (k_ > host.order()) return 0;
    if (host.order() <= 64) {
        GraphMapDFS dfs{host, adj_before_, k_, std::vector<int>(static_cast<std::size_t>(k_)), 0};
        dfs.rec(0, 0);
        return dfs.leaves;
    }
    BigGraphMapDFS dfs{host, adj_before_, k_, std::vector<int>(static_cast<std::size_t>(k_)),
                       std::vector<char>(static_cast<std::size_t>(host.order()), 0), 0};
    dfs.rec(0);
    return dfs.leaves;
}

namespace {

struct RowsMapDFS {
    const std::uint32_t* rows;
    int host_n;
    const std::vector<VertexMask>& adj_before;
    int k;
    int assign[10];
    std::int64_t leaves = 0;

    void rec(int level, std::uint32_t used) {
        if (level == k) {
            ++leaves;
            return;
        }
        for (int v = 0; v < host_n; ++v) {
            if (used >> v & 1) continue;
            bool ok = true;
            VertexMask req = adj_before[static_cast<std::size_t>(level)];
            while (ok && req) {
                int p = lowest_vertex(req);
                req &= req - 1;
                ok = rows[assign[p]] >> v & 1;
            }
            if (!ok) continue;
            assign[level] = v;
            rec(level + 1, used | (std::uint32_t{1} << v));
        }
    }
};

} // namespace

std::int64_t CopyCounter::count_rows(const std::uint32_t* rows, int host_n) const {
    if (pat_.p != 2) throw std::invalid_argument("row hosts require a 2-uniform pattern");
    if (k_ > host_n) return 0;
    RowsMapDFS dfs{rows, host_n, adj_before_, k_, {}, 0};
    dfs.rec(0, 0);
    if (dfs.leaves % aut_ != 0) throw std::logic_error("injective map count not divisible by automorphism count");
    return dfs.leaves / aut_;
}

std::int64_t CopyCounter::count(const Hypergraph& host) const {
    std::int64_t maps = injective_maps(host);
    if (maps % aut_ != 0) throw std::logic_error("injective map count not divisible by automorphism count");
    return maps / aut_;
}

std::int64_t CopyCounter::count(const Graph& host) const {
    std::int64_t maps = injective_maps(host);
    if (maps % aut_ != 0) throw std::logic_error("injective map count not divisible by automorphism count");
    return maps / aut_;
}

std::int64_t count_copies(const Hypergraph& pattern, const Hypergraph& host) {
    return CopyCounter(pattern).count(host);
}

} // namespace turanpack
