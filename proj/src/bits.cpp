#include "turanpack/bits.hpp"

namespace turanpack {

std::vector<int> mask_to_vertices(VertexMask m) {
    std::vector<int> vs;
    vs.reserve(static_cast<std::size_t>(popcount(m)));
    for_each_vertex(m, [&](int v) { vs.push_back(v); });
    return vs;
}

VertexMask vertices_to_mask(const std::vector<int>& vs) {
    VertexMask m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) * b;
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowError("64-bit overflow in multiplication");
    return static_cast<std::int64_t>(r);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    __int128 r = static_cast<__int128>(a) + b;
    if (r > INT64_MAX || r < INT64_MIN) throw OverflowError("64-bit overflow in addition");
    return static_cast<std::int64_t>(r);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > INT64_MAX) throw OverflowError("binomial overflows 64 bits");
    }
    return static_cast<std::int64_t>(r);
}

} // namespace turanpack
