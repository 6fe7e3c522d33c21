#include <dpchroma/cover.hpp>
#include <dpchroma/error.hpp>

#include <numeric>
#include <queue>
#include <string>

namespace dpchroma
{
    MatchingCover::MatchingCover(Graph base, int fold, std::vector<Permutation> perms) :
        _base(std::move(base)),
        _fold(fold),
        _perms(std::move(perms))
    {
        if (_fold < 1)
            fail(ErrorKind::invalid_parameter, "cover fold must be positive");
        if (_perms.size() != _base.edge_count())
            fail(ErrorKind::malformed_cover, "expected one permutation per edge");
        for (auto & p : _perms)
            if (p.size() != _fold)
                fail(ErrorKind::invalid_parameter, "permutation size " + std::to_string(p.size())
                        + " does not match fold " + std::to_string(_fold));
    }

    auto MatchingCover::matching(Vertex u, Vertex v) const -> Permutation
    {
        auto e = _base.edge_index(u, v);
        if (! e)
            fail(ErrorKind::invalid_parameter, "no edge {" + std::to_string(u) + ", " + std::to_string(v) + "}");
        return u < v ? _perms[*e] : invert(_perms[*e]);
    }

    auto build_cover(Graph g, int k, const std::map<Edge, Permutation> & perms) -> MatchingCover
    {
        std::vector<Permutation> aligned;
        aligned.reserve(g.edge_count());
        for (auto & e : g.edges()) {
            auto it = perms.find(e);
            if (it == perms.end())
                fail(ErrorKind::malformed_cover, "missing permutation for edge {"
                        + std::to_string(e.u) + ", " + std::to_string(e.v) + "}");
            aligned.push_back(it->second);
        }
        if (perms.size() != g.edge_count())
            fail(ErrorKind::malformed_cover, "permutation given for a non-edge");
        return MatchingCover(std::move(g), k, std::move(aligned));
    }

    auto is_valid_coloring(const MatchingCover & c, std::span<const int> coloring) -> bool
    {
        auto & g = c.base_graph();
        if (static_cast<int>(coloring.size()) != g.vertex_count())
            fail(ErrorKind::invalid_parameter, "colouring is not total");
        for (auto x : coloring)
            if (x < 0 || x >= c.fold())
                fail(ErrorKind::invalid_parameter, "colour out of range");

        for (std::size_t i = 0 ; i < g.edge_count() ; ++i) {
            auto [u, v] = g.edges()[i];
            if (c.permutation(i)(coloring[u]) == coloring[v])
                return false;
        }
        return true;
    }

    auto relabel_fiber(const MatchingCover & c, Vertex v, const Permutation & tau) -> MatchingCover
    {
        if (tau.size() != c.fold())
            fail(ErrorKind::invalid_parameter, "relabelling permutation has the wrong size");
        auto & g = c.base_graph();
        if (v < 0 || v >= g.vertex_count())
            fail(ErrorKind::invalid_parameter, "no such vertex");

        auto tau_inverse = invert(tau);
        auto perms = c.permutations();
        for (std::size_t i = 0 ; i < g.edge_count() ; ++i) {
            auto [a, b] = g.edges()[i];
            if (a == v)
                perms[i] = compose(perms[i], tau_inverse);
            else if (b == v)
                perms[i] = compose(tau, perms[i]);
        }
        return MatchingCover(g, c.fold(), std::move(perms));
    }

    auto spanning_tree_edges(const Graph & g) -> std::vector<std::size_t>
    {
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };

        std::vector<std::size_t> result;
        for (std::size_t i = 0 ; i < g.edge_count() ; ++i) {
            auto [u, v] = g.edges()[i];
            auto ru = find(u), rv = find(v);
            if (ru != rv) {
                parent[std::max(ru, rv)] = std::min(ru, rv);
                result.push_back(i);
            }
        }
        return result;
    }

    auto normalize(const MatchingCover & c) -> MatchingCover
    {
        auto & g = c.base_graph();
        if (! is_connected(g))
            fail(ErrorKind::unsupported_input, "normalize needs a connected base graph");

        std::vector<std::vector<std::size_t>> tree_adjacency(g.vertex_count());
        for (auto i : spanning_tree_edges(g)) {
            tree_adjacency[g.edges()[i].u].push_back(i);
            tree_adjacency[g.edges()[i].v].push_back(i);
        }

        MatchingCover result = c;
        std::vector<bool> fixed(g.vertex_count(), false);
        std::queue<Vertex> queue;
        if (g.vertex_count() > 0) {
            fixed[0] = true;
            queue.push(0);
        }
        while (! queue.empty()) {
            auto x = queue.front();
            queue.pop();
            for (auto i : tree_adjacency[x]) {
                auto [u, v] = g.edges()[i];
                auto y = (u == x) ? v : u;
                if (fixed[y])
                    continue;
                auto & sigma = result.permutation(i);
                // y on the image side wants sigma^-1 applied after; on the
                // domain side sigma itself.
                result = relabel_fiber(result, y, y == v ? invert(sigma) : Permutation(sigma));
                fixed[y] = true;
                queue.push(y);
            }
        }
        return result;
    }
}
