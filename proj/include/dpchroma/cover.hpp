#pragma once

#include <dpchroma/graph.hpp>
#include <dpchroma/permutation.hpp>

#include <map>
#include <span>
#include <vector>

namespace dpchroma
{
    /// One colour in [0, fold) per base-graph vertex.
    using CandidateColoring = std::vector<int>;

    /// A k-fold cover whose cross-fibre edge sets are perfect matchings. The
    /// permutation on edge {u, v} with u < v sends colour i of u to the colour
    /// of v it is joined to in H.
    class MatchingCover
    {
        public:
            /// perms is aligned with base.edges().
            MatchingCover(Graph base, int fold, std::vector<Permutation> perms);

            auto base_graph() const noexcept -> const Graph & { return _base; }
            auto fold() const noexcept -> int { return _fold; }
            auto permutations() const noexcept -> const std::vector<Permutation> & { return _perms; }
            auto permutation(std::size_t edge) const -> const Permutation & { return _perms[edge]; }

            /// Permutation from u's fibre to v's fibre, inverted when u > v.
            auto matching(Vertex u, Vertex v) const -> Permutation;

            auto operator==(const MatchingCover &) const -> bool = default;

        private:
            Graph _base;
            int _fold;
            std::vector<Permutation> _perms;
    };

    /// Throws malformed-cover when perms does not cover exactly the edges of
    /// g, and invalid-parameter when a permutation has the wrong size.
    auto build_cover(Graph g, int k, const std::map<Edge, Permutation> & perms) -> MatchingCover;

    auto is_valid_coloring(const MatchingCover & c, std::span<const int> coloring) -> bool;

    /// Renames the colours of L(v) through tau; colour x becomes tau(x).
    auto relabel_fiber(const MatchingCover & c, Vertex v, const Permutation & tau) -> MatchingCover;

    /// Lexicographically smallest spanning forest: edges scanned in sorted
    /// order, kept when they join two components. Returns edge indices.
    auto spanning_tree_edges(const Graph & g) -> std::vector<std::size_t>;

    /// Relabels fibres so every spanning-tree edge carries the identity.
    /// Throws unsupported-input for a disconnected base graph.
    auto normalize(const MatchingCover & c) -> MatchingCover;
}
