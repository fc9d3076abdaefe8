#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "turanpack/errors.hpp"

namespace turanpack {

using VertexMask = std::uint64_t; // vertex subsets of a <=64-vertex ground set

inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest_vertex(VertexMask m) { return std::countr_zero(m); }
inline VertexMask bit(int v) { return VertexMask{1} << v; }
inline VertexMask full_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

template <typename F>
inline void for_each_vertex(VertexMask m, F&& f) {
    while (m) {
        f(std::countr_zero(m));
        m &= m - 1;
    }
}

std::vector<int> mask_to_vertices(VertexMask m);
VertexMask vertices_to_mask(const std::vector<int>& vs);

// Exact binomial coefficient; throws OverflowError past 2^63-1.
std::int64_t binomial(std::int64_t n, std::int64_t k);

std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

// Enumerate k-subsets of {0..n-1} as masks, ordered by the lexicographic
// order of their sorted vertex lists. f may return void, or bool where
// false stops the enumeration.
template <typename F>
void for_each_ksubset_lex(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    auto emit = [&]() -> bool {
        VertexMask m = 0;
        for (int v : c) m |= bit(v);
        if constexpr (std::is_void_v<decltype(f(VertexMask{}))>) {
            f(m);
            return true;
        } else {
            return f(m);
        }
    };
    if (k == 0) {
        if constexpr (std::is_void_v<decltype(f(VertexMask{}))>) f(VertexMask{0});
        else (void)f(VertexMask{0});
        return;
    }
    while (true) {
        if (!emit()) return;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace turanpack
