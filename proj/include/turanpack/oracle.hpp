#pragma once

#include <functional>
#include <optional>
#include <string>

#include "turanpack/counting.hpp"
#include "turanpack/formulas.hpp"

namespace turanpack {

enum class EnumMode { raw, dedup };

struct OracleLimits {
    bool force = false;   // raise the enumeration guards
    int workers = 0;      // 0 = TURANPACK_WORKERS env var, else hardware
    int witness_cap = 16; // extremal witnesses kept, up to isomorphism
};

struct HostConstraint {
    int min_universal = 0; // hosts must contain this many universal vertices
};

struct OracleResult {
    std::int64_t value = 0;
    std::vector<Hypergraph> witnesses; // canonical forms, canonical order
    std::int64_t scanned = 0;          // hosts whose pattern count was evaluated
    std::int64_t pruned = 0;           // hosts skipped by freeness subtree cuts
    double elapsed_seconds = 0.0;
};

int resolve_workers(int requested);

std::int64_t raw_host_count(int n, int p);

// All 2^C(n,p) labeled hosts. Guard: C(n,p) <= 30 unless forced.
void for_each_host_raw(int n, int p, const std::function<void(const Hypergraph&)>& fn, bool force = false);

// One representative per isomorphism class, as canonical forms in canonical
// order. Guards: n <= 8 for p = 2, n <= 6 for p >= 3. Results are cached.
std::vector<Hypergraph> enumerate_dedup(int n, int p, bool force = false);

// max of N(pattern, G) over tK_r^p-free n-vertex hosts G meeting the
// constraint. Freeness is tested before any counting; in the p = 2 raw path
// whole subtrees of the edge-subset tree are cut as soon as a partial graph
// contains tK_r. Sharding is deterministic: results do not depend on the
// worker count.
OracleResult brute_force_ex(int n, const Hypergraph& pattern, int t, int r, EnumMode mode = EnumMode::raw,
                            HostConstraint constraint = {}, OracleLimits limits = {});

// A K_{x+1}^p-free p-graph on m vertices with the most K_x^p copies. For
// p = 2 this is T(m,x) by Zykov's theorem; p >= 3 runs a branch-and-bound
// search over free hosts (guard: m <= 7 and C(m,p) <= 35).
Hypergraph search_tail_t(int m, int x, int p, OracleLimits limits = {});

// Default tail supplier for extremal_construction, backed by search_tail_t.
TailSupplier oracle_tail_supplier(OracleLimits limits = {});

struct Theorem1Row {
    int n = 0;
    std::int64_t oracle_value = 0;
    std::int64_t formula_value = 0;
    bool equal = false;
    std::string witness; // graph6 of one extremal witness
};

struct Theorem1Report {
    int s = 0, r = 0, t = 0;
    std::vector<Theorem1Row> rows;
    bool lower_bound_ok = true;        // oracle >= formula at every n
    std::optional<int> equality_onset; // least n with equality through the range end
};

// Oracle vs ex_closed_value over n in [n_lo, n_hi], p = 2.
Theorem1Report verify_theorem1(int n_lo, int n_hi, int s, int r, int t, OracleLimits limits = {});

// Proposition 4 probe: true iff constraining hosts to t-1 universal
// vertices does not lower the extremal value. Requires K_r not a subgraph
// of the pattern and t >= 2.
bool verify_universal_vertices(int n, const Hypergraph& pattern, int t, int r, OracleLimits limits = {});

} // namespace turanpack
