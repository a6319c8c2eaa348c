#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "siglap/matrix.hpp"

namespace siglap {

using Edge = std::pair<std::size_t, std::size_t>;

/**
 * Simple undirected graph on vertices 0..n-1.  Edge order is significant: it
 * fixes the row order of the incidence matrices.
 */
class Graph
{
public:
    Graph() = default;
    /** Throws IllFormedInput on loops, repeated edges or out-of-range endpoints. */
    Graph(std::size_t n, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }

    friend bool operator==(const Graph& a, const Graph& b)
    {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

/** Per-vertex side, +1 or -1. */
struct Bipartition
{
    std::vector<int> side;
};

/**
 * Reads the edge-list text format: one `u v` pair of 1-based indices per line,
 * `#` comments and blank lines skipped, optional `n <count>` header.
 * Throws ParseError carrying the offending line number.
 */
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/** Canonical text form: `n <count>` followed by one `u v` line per edge. */
std::string to_edge_list(const Graph& g);

bool is_connected(const Graph& g);

/** A proper 2-colouring if one exists (every component is coloured from its lowest vertex with +1). */
std::optional<Bipartition> bipartition(const Graph& g);
inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

RatVector degrees(const Graph& g);

/**
 * Length of the shortest closed walk of odd length through u, found by BFS
 * from (u, even) to (u, odd) on the bipartite double cover.  Empty when the
 * component of u is bipartite.
 */
std::optional<std::size_t> odd_walk_length(const Graph& g, std::size_t u);

}  // namespace siglap
