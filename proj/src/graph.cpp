#include "turanpack/graph.hpp"

#include <stdexcept>

namespace turanpack {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64 > 0 ? (n + 63) / 64 : 1) {
    if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
    adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
}

std::int64_t Graph::edge_count() const {
    std::int64_t twice = 0;
    for (std::uint64_t w : adj_) twice += std::popcount(w);
    return twice / 2;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row_word(v, w));
    return d;
}

} // namespace turanpack
