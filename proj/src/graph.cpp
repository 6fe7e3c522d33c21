#include <dpchroma/graph.hpp>
#include <dpchroma/error.hpp>

#include <algorithm>
#include <string>

namespace dpchroma
{
    Graph::Graph(int vertex_count, std::vector<Edge> edges, std::optional<Bipartition> bipartition) :
        _vertex_count(vertex_count),
        _edges(std::move(edges)),
        _adjacency(vertex_count < 0 ? 0 : vertex_count),
        _bipartition(std::move(bipartition))
    {
        if (vertex_count < 0)
            fail(ErrorKind::invalid_parameter, "negative vertex count");

        for (auto & e : _edges) {
            if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
                fail(ErrorKind::invalid_parameter, "edge endpoint out of range");
            if (e.u == e.v)
                fail(ErrorKind::invalid_parameter, "loop at vertex " + std::to_string(e.u));
            if (e.u > e.v)
                std::swap(e.u, e.v);
        }
        std::sort(_edges.begin(), _edges.end());
        if (std::adjacent_find(_edges.begin(), _edges.end()) != _edges.end())
            fail(ErrorKind::invalid_parameter, "repeated edge");

        for (auto & e : _edges) {
            _adjacency[e.u].push_back(e.v);
            _adjacency[e.v].push_back(e.u);
        }
        for (auto & a : _adjacency)
            std::sort(a.begin(), a.end());

        if (_bipartition) {
            std::vector<int> side(vertex_count, -1);
            for (auto v : _bipartition->left) {
                if (v < 0 || v >= vertex_count || side[v] != -1)
                    fail(ErrorKind::invalid_parameter, "bad bipartition");
                side[v] = 0;
            }
            for (auto v : _bipartition->right) {
                if (v < 0 || v >= vertex_count || side[v] != -1)
                    fail(ErrorKind::invalid_parameter, "bad bipartition");
                side[v] = 1;
            }
            if (std::find(side.begin(), side.end(), -1) != side.end())
                fail(ErrorKind::invalid_parameter, "bipartition does not cover every vertex");
            for (auto & e : _edges)
                if (side[e.u] == side[e.v])
                    fail(ErrorKind::invalid_parameter, "edge inside one side of the bipartition");
        }
    }

    auto Graph::edge_index(Vertex u, Vertex v) const -> std::optional<std::size_t>
    {
        if (u > v)
            std::swap(u, v);
        auto it = std::lower_bound(_edges.begin(), _edges.end(), Edge{u, v});
        if (it == _edges.end() || *it != Edge{u, v})
            return std::nullopt;
        return static_cast<std::size_t>(it - _edges.begin());
    }

    auto complete_bipartite(int k, int t) -> Graph
    {
        if (k < 1 || t < 1)
            fail(ErrorKind::invalid_parameter, "K_{k,t} needs k >= 1 and t >= 1");
        std::vector<Edge> edges;
        Bipartition parts;
        for (int i = 0 ; i < k ; ++i)
            parts.left.push_back(i);
        for (int j = 0 ; j < t ; ++j)
            parts.right.push_back(k + j);
        for (int i = 0 ; i < k ; ++i)
            for (int j = 0 ; j < t ; ++j)
                edges.push_back({i, k + j});
        return Graph(k + t, std::move(edges), std::move(parts));
    }

    auto cycle(int n) -> Graph
    {
        if (n < 3)
            fail(ErrorKind::invalid_parameter, "a cycle needs at least 3 vertices");
        std::vector<Edge> edges;
        for (int i = 0 ; i < n ; ++i)
            edges.push_back({i, (i + 1) % n});
        return Graph(n, std::move(edges));
    }

    auto is_connected(const Graph & g) -> bool
    {
        if (g.vertex_count() == 0)
            return true;
        std::vector<bool> seen(g.vertex_count(), false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        int reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbours(v))
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == g.vertex_count();
    }

    namespace
    {
        auto smallest_last(const Graph & g, int & degeneracy_out) -> std::vector<Vertex>
        {
            int n = g.vertex_count();
            std::vector<int> degree(n);
            std::vector<bool> removed(n, false);
            for (int v = 0 ; v < n ; ++v)
                degree[v] = g.degree(v);

            std::vector<Vertex> removal;
            degeneracy_out = 0;
            for (int step = 0 ; step < n ; ++step) {
                Vertex best = -1;
                for (int v = 0 ; v < n ; ++v)
                    if (! removed[v] && (best == -1 || degree[v] < degree[best]))
                        best = v;
                degeneracy_out = std::max(degeneracy_out, degree[best]);
                removed[best] = true;
                removal.push_back(best);
                for (auto w : g.neighbours(best))
                    if (! removed[w])
                        --degree[w];
            }
            std::reverse(removal.begin(), removal.end());
            return removal;
        }
    }

    auto smallest_last_order(const Graph & g) -> std::vector<Vertex>
    {
        int d;
        return smallest_last(g, d);
    }

    auto degeneracy(const Graph & g) -> int
    {
        int d;
        smallest_last(g, d);
        return d;
    }

    auto colouring_number(const Graph & g) -> int
    {
        return degeneracy(g) + 1;
    }
}
