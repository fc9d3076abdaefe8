#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turanpack/bits.hpp"

namespace turanpack {

// Simple undirected graph on 0-indexed vertices, stored as dense adjacency
// bit rows (64-bit words). Symmetry and a zero diagonal are maintained by
// add_edge; values are treated as immutable once built and shared.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph complete(int n);

    int order() const { return n_; }
    int words() const { return words_; }

    bool has_edge(int u, int v) const {
        return (adj_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
    }
    void add_edge(int u, int v);

    std::int64_t edge_count() const;
    int degree(int v) const;

    std::span<const std::uint64_t> row(int v) const {
        return {adj_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }
    std::uint64_t row_word(int v, int w) const { return adj_[static_cast<std::size_t>(v) * words_ + w]; }
    // First adjacency word; complete row for graphs on at most 64 vertices.
    std::uint64_t row0(int v) const { return adj_[static_cast<std::size_t>(v) * words_]; }

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> adj_;
};

} // namespace turanpack
