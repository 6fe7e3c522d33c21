#include <doctest.h>

#include <dpchroma/cache.hpp>
#include <dpchroma/certificate.hpp>
#include <dpchroma/construct.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/formats.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dpchroma;

namespace
{
    auto temp_path(const std::string & name) -> std::string
    {
        return (std::filesystem::temp_directory_path() / ("dpchroma_test_" + name)).string();
    }

    auto parse_error_kind(const std::string & text) -> std::optional<ErrorKind>
    {
        std::istringstream in(text);
        try {
            read_graph_text(in);
        }
        catch (const Error & e) {
            return e.kind();
        }
        return std::nullopt;
    }
}

TEST_CASE("graph text round trip")
{
    for (auto & g : {cycle(5), complete_bipartite(2, 3), Graph(3, {}), Graph(4, {{0, 1}, {2, 3}})}) {
        std::ostringstream out;
        write_graph_text(out, g);
        std::istringstream in(out.str());
        CHECK(read_graph_text(in) == g);
    }

    std::istringstream text("graph 4 4\nbipartition 2 2\nedge 0 2\nedge 0 3\nedge 1 2\nedge 1 3\n");
    auto g = read_graph_text(text);
    CHECK(g == complete_bipartite(2, 2));
    REQUIRE(g.bipartition());
}

TEST_CASE("graph text errors")
{
    CHECK(parse_error_kind("") == ErrorKind::parse_error);
    CHECK(parse_error_kind("grph 2 1\nedge 0 1\n") == ErrorKind::parse_error);
    CHECK(parse_error_kind("graph 2 2\nedge 0 1\n") == ErrorKind::parse_error);
    CHECK(parse_error_kind("graph 2 1\nedge 0 5\n") == ErrorKind::parse_error);
    CHECK(parse_error_kind("graph 2 1\nedge 0 0\n") == ErrorKind::parse_error);
    CHECK(parse_error_kind("graph 2 1\nedge 0 1\nedge 0 1\n") == ErrorKind::parse_error);
    CHECK(parse_error_kind("graph 3 0\nbipartition 1 1\n") == ErrorKind::parse_error);
    CHECK(parse_error_kind("graph 2 1\nedge 0 1\n") == std::nullopt);
}

TEST_CASE("graph json round trip")
{
    auto g = complete_bipartite(3, 2);
    auto j = graph_to_json(g);
    CHECK(j.at("n") == 5);
    CHECK(j.at("m") == 6);
    CHECK(j.at("bipartition") == nlohmann::json::array({3, 2}));
    CHECK(graph_from_json(j) == g);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::object()), Error);
}

TEST_CASE("cover json is byte identical after a round trip")
{
    for (std::uint64_t seed = 0 ; seed < 5 ; ++seed) {
        auto c = random_cover(3, 4, seed);
        auto text = dump_json(cover_to_json(c, std::string("colorable")));
        auto back = cover_from_json(nlohmann::json::parse(text));
        CHECK(back == c);
        CHECK(dump_json(cover_to_json(back, std::string("colorable"))) == text);
    }
    auto c = random_cover(2, 2, 1);
    auto j = cover_to_json(c);
    CHECK(! j.contains("claim"));
    for (auto & m : j.at("matchings"))
        CHECK(m.at("u").get<int>() < m.at("v").get<int>());
}

TEST_CASE("malformed cover json")
{
    auto j = cover_to_json(random_cover(2, 2, 1));
    auto missing = j;
    missing["matchings"].erase(0);
    CHECK_THROWS_AS(cover_from_json(missing), Error);

    auto bad_perm = j;
    bad_perm["matchings"][0]["perm"] = {0, 0};
    CHECK_THROWS_AS(cover_from_json(bad_perm), Error);

    auto wrong_type = j;
    wrong_type["k"] = "two";
    CHECK_THROWS_AS(cover_from_json(wrong_type), Error);
}

TEST_CASE("certificate round trip and checking")
{
    auto r = mu_exact(3);
    auto cert = certificate_from_mu(r, true);
    CHECK(cert.claim == "exact-mu");
    auto j = certificate_to_json(cert);
    auto text = dump_json(j);
    auto back = certificate_from_json(nlohmann::json::parse(text));
    CHECK(dump_json(certificate_to_json(back)) == text);
    auto again = mu_result_from_certificate(back);
    CHECK(again.hi == 6);
    CHECK(again.lo == 6);
    CHECK(again.witness_columns == r.witness_columns);

    auto report = check_document(j);
    CHECK(report.status == CheckStatus::verified);

    auto greedy = certificate_to_json(certificate_from_mu(mu_greedy(4), true));
    CHECK(greedy.at("claim") == "bracket");
    CHECK(check_document(greedy).status == CheckStatus::verified);
}

TEST_CASE("tampered certificates fail")
{
    auto j = certificate_to_json(certificate_from_mu(mu_exact(3), true));

    // Swap two entries of one permutation.
    auto tampered = j;
    auto & perm = tampered["columns"][2][1];
    std::swap(perm[0], perm[1]);
    auto report = check_document(tampered);
    CHECK(report.status == CheckStatus::failed);
    CHECK(! report.reason.empty());

    auto dropped = j;
    dropped["columns"].erase(0);
    dropped["t"] = 5;
    dropped["lo"] = 5;
    CHECK(check_document(dropped).status == CheckStatus::failed);

    auto overclaim = j;
    overclaim["lo"] = 7;
    CHECK(check_document(overclaim).status == CheckStatus::failed);

    auto underclaim = certificate_to_json(certificate_from_mu(mu_greedy(3), true));
    underclaim["claim"] = "exact-mu";
    underclaim["lo"] = underclaim["t"];
    if (underclaim["t"].get<int>() > 6)
        CHECK(check_document(underclaim).status == CheckStatus::failed);

    auto nonsense = j;
    nonsense["columns"][0][0] = {0, 1, 5};
    CHECK(check_document(nonsense).status == CheckStatus::failed);
    CHECK(check_document(nlohmann::json::array()).status == CheckStatus::failed);
}

TEST_CASE("tampered covers fail their claim")
{
    auto ext = extend_to_uncolorable(derandomized_cover(3, 9));
    auto j = cover_to_json(ext.cover, std::string("uncolorable"));
    CHECK(check_document(j).status == CheckStatus::verified);

    // Replace every permutation at the first right vertex by the identity's
    // neighbour; some edit will make the cover colourable.
    bool broke = false;
    for (std::size_t m = 0 ; m < j["matchings"].size() && ! broke ; ++m) {
        auto t = j;
        auto & perm = t["matchings"][m]["perm"];
        std::swap(perm[0], perm[1]);
        broke = check_document(t).status == CheckStatus::failed;
    }
    CHECK(broke);

    auto colourable = cover_to_json(random_cover(2, 1, 3), std::string("uncolorable"));
    CHECK(check_document(colourable).status == CheckStatus::failed);
}

TEST_CASE("lower bound re-check can run out of budget")
{
    MuResult fake = mu_greedy(4);
    fake.lo = 13;
    auto j = certificate_to_json(certificate_from_mu(fake, true));
    auto report = check_document(j, CheckOptions{50, 1});
    CHECK(report.status == CheckStatus::budget_exhausted);
}

TEST_CASE("result cache")
{
    auto path = temp_path("cache.json");
    std::filesystem::remove(path);
    auto cert = certificate_to_json(certificate_from_mu(mu_exact(2), true));
    {
        ResultCache cache(path);
        CHECK(! cache.lookup(2, "exact", 10));
        cache.store(2, "exact", 10, cert);
    }
    {
        ResultCache cache(path);
        auto hit = cache.lookup(2, "exact", 10);
        REQUIRE(hit);
        CHECK(*hit == cert);
        CHECK(! cache.lookup(2, "exact", 11));
        CHECK(! cache.lookup(2, "greedy", 10));
    }
    write_text_file(path, "{ not json");
    CHECK(! ResultCache(path).lookup(2, "exact", 10));
    std::filesystem::remove(path);
    CHECK(ResultCache::key(4, "exact", 5) == "k=4;method=exact;budget=5");
}
