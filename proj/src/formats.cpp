#include <dpchroma/formats.hpp>
#include <dpchroma/error.hpp>

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace dpchroma
{
    namespace
    {
        auto bipartition_sides(int k, int t) -> Bipartition
        {
            Bipartition parts;
            for (int i = 0 ; i < k ; ++i)
                parts.left.push_back(i);
            for (int j = 0 ; j < t ; ++j)
                parts.right.push_back(k + j);
            return parts;
        }

        /// The text and JSON formats can only express the standard
        /// bipartition with the left side first.
        auto standard_sides(const Bipartition & b) -> bool
        {
            return b == bipartition_sides(static_cast<int>(b.left.size()), static_cast<int>(b.right.size()));
        }

        template <typename T>
        auto field(const nlohmann::json & j, const char * name) -> T
        {
            if (! j.is_object() || ! j.contains(name))
                fail(ErrorKind::parse_error, std::string("missing field '") + name + "'");
            try {
                return j.at(name).get<T>();
            }
            catch (const nlohmann::json::exception &) {
                fail(ErrorKind::parse_error, std::string("field '") + name + "' has the wrong type");
            }
        }
    }

    auto read_graph_text(std::istream & in) -> Graph
    {
        std::string line, word;
        auto next_line = [&] () -> bool {
            while (std::getline(in, line)) {
                if (line.find_first_not_of(" \t\r") != std::string::npos)
                    return true;
            }
            return false;
        };

        if (! next_line())
            fail(ErrorKind::parse_error, "empty graph file");
        std::istringstream header(line);
        long long n = -1, m = -1;
        if (! (header >> word >> n >> m) || word != "graph" || n < 0 || m < 0 || (header >> word))
            fail(ErrorKind::parse_error, "expected 'graph <n> <m>'");

        std::optional<Bipartition> parts;
        std::vector<Edge> edges;
        bool first = true;
        while (next_line()) {
            std::istringstream fields(line);
            fields >> word;
            if (word == "bipartition" && first && edges.empty()) {
                long long k = -1, t = -1;
                if (! (fields >> k >> t) || k < 0 || t < 0 || k + t != n || (fields >> word))
                    fail(ErrorKind::parse_error, "expected 'bipartition <k> <t>' with k + t = n");
                parts = bipartition_sides(static_cast<int>(k), static_cast<int>(t));
            }
            else if (word == "edge") {
                long long u = -1, v = -1;
                if (! (fields >> u >> v) || (fields >> word))
                    fail(ErrorKind::parse_error, "expected 'edge <u> <v>'");
                if (u < 0 || v < 0 || u >= n || v >= n)
                    fail(ErrorKind::parse_error, "edge endpoint out of range");
                edges.push_back({static_cast<int>(u), static_cast<int>(v)});
            }
            else
                fail(ErrorKind::parse_error, "unexpected line: " + line);
            first = false;
        }
        if (static_cast<long long>(edges.size()) != m)
            fail(ErrorKind::parse_error, "edge count does not match header");

        try {
            return Graph(static_cast<int>(n), std::move(edges), std::move(parts));
        }
        catch (const Error & e) {
            fail(ErrorKind::parse_error, e.what());
        }
    }

    void write_graph_text(std::ostream & out, const Graph & g)
    {
        out << "graph " << g.vertex_count() << " " << g.edge_count() << "\n";
        if (auto & b = g.bipartition() ; b) {
            if (! standard_sides(*b))
                fail(ErrorKind::unsupported_input, "text format only expresses a left-first bipartition");
            out << "bipartition " << b->left.size() << " " << b->right.size() << "\n";
        }
        for (auto & e : g.edges())
            out << "edge " << e.u << " " << e.v << "\n";
    }

    auto graph_to_json(const Graph & g) -> nlohmann::json
    {
        nlohmann::json j;
        j["n"] = g.vertex_count();
        j["m"] = g.edge_count();
        auto edges = nlohmann::json::array();
        for (auto & e : g.edges())
            edges.push_back({e.u, e.v});
        j["edges"] = std::move(edges);
        if (auto & b = g.bipartition() ; b) {
            if (! standard_sides(*b))
                fail(ErrorKind::unsupported_input, "JSON format only expresses a left-first bipartition");
            j["bipartition"] = {b->left.size(), b->right.size()};
        }
        return j;
    }

    auto graph_from_json(const nlohmann::json & j) -> Graph
    {
        auto n = field<int>(j, "n");
        auto m = field<std::size_t>(j, "m");
        auto raw = field<std::vector<std::vector<int>>>(j, "edges");
        std::vector<Edge> edges;
        for (auto & e : raw) {
            if (e.size() != 2)
                fail(ErrorKind::parse_error, "edge must have two endpoints");
            edges.push_back({e[0], e[1]});
        }
        if (edges.size() != m)
            fail(ErrorKind::parse_error, "edge count does not match 'm'");
        std::optional<Bipartition> parts;
        if (j.contains("bipartition")) {
            auto sides = field<std::vector<int>>(j, "bipartition");
            if (sides.size() != 2 || sides[0] < 0 || sides[1] < 0 || sides[0] + sides[1] != n)
                fail(ErrorKind::parse_error, "bipartition must be [k, t] with k + t = n");
            parts = bipartition_sides(sides[0], sides[1]);
        }
        try {
            return Graph(n, std::move(edges), std::move(parts));
        }
        catch (const Error & e) {
            fail(ErrorKind::parse_error, e.what());
        }
    }

    auto cover_to_json(const MatchingCover & c, const std::optional<std::string> & claim) -> nlohmann::json
    {
        nlohmann::json j;
        j["k"] = c.fold();
        j["graph"] = graph_to_json(c.base_graph());
        auto matchings = nlohmann::json::array();
        for (std::size_t i = 0 ; i < c.base_graph().edge_count() ; ++i) {
            auto e = c.base_graph().edges()[i];
            matchings.push_back({{"u", e.u}, {"v", e.v}, {"perm", c.permutation(i).image()}});
        }
        j["matchings"] = std::move(matchings);
        if (claim)
            j["claim"] = *claim;
        return j;
    }

    auto cover_from_json(const nlohmann::json & j) -> MatchingCover
    {
        auto k = field<int>(j, "k");
        auto g = graph_from_json(field<nlohmann::json>(j, "graph"));
        auto matchings = field<nlohmann::json>(j, "matchings");
        if (! matchings.is_array())
            fail(ErrorKind::parse_error, "'matchings' must be a list");

        std::map<Edge, Permutation> perms;
        for (auto & record : matchings) {
            auto u = field<int>(record, "u");
            auto v = field<int>(record, "v");
            if (u >= v)
                fail(ErrorKind::malformed_cover, "matching records need u < v");
            auto image = field<std::vector<int>>(record, "perm");
            if (static_cast<int>(image.size()) != k)
                fail(ErrorKind::malformed_cover, "permutation size does not match k");
            try {
                if (! perms.emplace(Edge{u, v}, Permutation(std::move(image))).second)
                    fail(ErrorKind::malformed_cover, "repeated matching record");
            }
            catch (const Error & e) {
                if (e.kind() == ErrorKind::invalid_parameter)
                    fail(ErrorKind::malformed_cover, e.what());
                throw;
            }
        }
        return build_cover(std::move(g), k, perms);
    }

    auto dump_json(const nlohmann::json & j) -> std::string
    {
        return j.dump(2) + "\n";
    }

    auto read_json_file(const std::string & path) -> nlohmann::json
    {
        std::ifstream in(path);
        if (! in)
            fail(ErrorKind::parse_error, "cannot open " + path);
        try {
            return nlohmann::json::parse(in);
        }
        catch (const nlohmann::json::exception & e) {
            fail(ErrorKind::parse_error, "invalid JSON in " + path);
        }
    }

    void write_text_file(const std::string & path, const std::string & text)
    {
        std::ofstream out(path, std::ios::binary);
        if (! out)
            fail(ErrorKind::invalid_parameter, "cannot write " + path);
        out << text;
    }
}
