#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

namespace dpchroma
{
    using Vertex = int;

    /// An undirected edge, always stored with u < v.
    struct Edge
    {
        Vertex u;
        Vertex v;

        auto operator<=>(const Edge &) const = default;
    };

    struct Bipartition
    {
        std::vector<Vertex> left;
        std::vector<Vertex> right;

        auto operator==(const Bipartition &) const -> bool = default;
    };

    /// Simple undirected graph on vertices 0..n-1 with sorted edges.
    class Graph
    {
        public:
            Graph() = default;

            /// Throws invalid-parameter on loops, repeated edges, out-of-range
            /// endpoints, or a bipartition that is not respected by the edges.
            Graph(int vertex_count, std::vector<Edge> edges, std::optional<Bipartition> bipartition = std::nullopt);

            auto vertex_count() const noexcept -> int { return _vertex_count; }
            auto edge_count() const noexcept -> std::size_t { return _edges.size(); }
            auto edges() const noexcept -> const std::vector<Edge> & { return _edges; }
            auto neighbours(Vertex v) const -> const std::vector<Vertex> & { return _adjacency[v]; }
            auto degree(Vertex v) const -> int { return static_cast<int>(_adjacency[v].size()); }
            auto bipartition() const noexcept -> const std::optional<Bipartition> & { return _bipartition; }

            auto has_edge(Vertex u, Vertex v) const -> bool { return edge_index(u, v).has_value(); }

            /// Position of {u, v} in edges(), in either orientation.
            auto edge_index(Vertex u, Vertex v) const -> std::optional<std::size_t>;

            auto operator==(const Graph & other) const -> bool
            {
                return _vertex_count == other._vertex_count && _edges == other._edges && _bipartition == other._bipartition;
            }

        private:
            int _vertex_count = 0;
            std::vector<Edge> _edges;
            std::vector<std::vector<Vertex>> _adjacency;
            std::optional<Bipartition> _bipartition;
    };

    /// K_{k,t} with left side 0..k-1 and right side k..k+t-1.
    auto complete_bipartite(int k, int t) -> Graph;
    auto cycle(int n) -> Graph;

    auto is_connected(const Graph & g) -> bool;

    /// Smallest-last ordering: repeatedly remove a vertex of minimum remaining
    /// degree (ties to the smallest id), then reverse. Each vertex has at most
    /// degeneracy(g) neighbours earlier in the order.
    auto smallest_last_order(const Graph & g) -> std::vector<Vertex>;
    auto degeneracy(const Graph & g) -> int;

    /// col(G) = degeneracy + 1, an upper bound on the DP-chromatic number.
    auto colouring_number(const Graph & g) -> int;
}
