#include <dpchroma/certificate.hpp>
#include <dpchroma/dp_solver.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/formats.hpp>

#include <string>

namespace dpchroma
{
    auto certificate_from_mu(const MuResult & r, bool verified) -> Certificate
    {
        Certificate c;
        c.k = r.k;
        c.t = r.hi;
        c.columns = r.witness_columns;
        c.verified = verified;
        c.claim = r.exact() ? "exact-mu" : "bracket";
        c.lo = r.lo;
        c.log = r.impossibility_log;
        c.nodes = r.nodes;
        c.frontier = r.frontier;
        c.method = r.method;
        return c;
    }

    auto mu_result_from_certificate(const Certificate & c) -> MuResult
    {
        MuResult r;
        r.k = c.k;
        r.method = c.method;
        r.hi = c.t;
        r.lo = c.lo.value_or(c.t);
        r.witness_columns = c.columns;
        r.impossibility_log = c.log;
        r.nodes = c.nodes;
        r.frontier = c.frontier;
        return r;
    }

    auto certificate_to_json(const Certificate & c) -> nlohmann::json
    {
        nlohmann::json j;
        j["k"] = c.k;
        j["claim"] = c.claim;
        j["t"] = c.t;
        j["verified"] = c.verified;
        auto columns = nlohmann::json::array();
        for (auto & col : c.columns) {
            auto perms = nlohmann::json::array();
            for (auto & p : col.perms)
                perms.push_back(p.image());
            columns.push_back(std::move(perms));
        }
        j["columns"] = std::move(columns);
        if (c.lo)
            j["lo"] = *c.lo;
        if (! c.method.empty()) {
            nlohmann::json search;
            search["method"] = c.method;
            search["nodes"] = c.nodes;
            auto log = nlohmann::json::array();
            for (auto & entry : c.log)
                log.push_back({{"t", entry.t}, {"nodes", entry.nodes}});
            search["refuted"] = std::move(log);
            if (c.frontier)
                search["frontier"] = {{"t", c.frontier->t}, {"branch", c.frontier->branch},
                    {"nodes_in_t", c.frontier->nodes_in_t}};
            j["search"] = std::move(search);
        }
        return j;
    }

    auto certificate_from_json(const nlohmann::json & j) -> Certificate
    {
        Certificate c;
        try {
            c.k = j.at("k").get<int>();
            c.claim = j.at("claim").get<std::string>();
            c.t = j.at("t").get<int>();
            c.verified = j.at("verified").get<bool>();
            if (c.k < 1 || c.k > 6)
                fail(ErrorKind::parse_error, "k must be in 1..6");
            if (c.claim != "uncolorable" && c.claim != "exact-mu" && c.claim != "bracket")
                fail(ErrorKind::parse_error, "unknown claim '" + c.claim + "'");
            for (auto & col : j.at("columns")) {
                std::vector<Permutation> perms;
                for (auto & p : col)
                    perms.emplace_back(p.get<std::vector<int>>());
                if (static_cast<int>(perms.size()) != c.k)
                    fail(ErrorKind::parse_error, "column does not have k permutations");
                c.columns.push_back(make_column(std::move(perms)));
            }
            if (j.contains("lo"))
                c.lo = j.at("lo").get<int>();
            if (j.contains("search")) {
                auto & s = j.at("search");
                c.method = s.at("method").get<std::string>();
                c.nodes = s.at("nodes").get<std::uint64_t>();
                for (auto & entry : s.at("refuted"))
                    c.log.push_back({entry.at("t").get<int>(), entry.at("nodes").get<std::uint64_t>()});
                if (s.contains("frontier")) {
                    auto & f = s.at("frontier");
                    c.frontier = SearchFrontier{f.at("t").get<int>(), f.at("branch").get<std::size_t>(),
                        f.at("nodes_in_t").get<std::uint64_t>()};
                }
            }
        }
        catch (const nlohmann::json::exception & e) {
            fail(ErrorKind::parse_error, std::string("malformed certificate: ") + e.what());
        }
        catch (const Error & e) {
            if (e.kind() == ErrorKind::parse_error)
                throw;
            fail(ErrorKind::parse_error, std::string("malformed certificate: ") + e.what());
        }
        if (c.t < 1 || static_cast<int>(c.columns.size()) != c.t)
            fail(ErrorKind::parse_error, "t must equal the number of columns");
        for (auto & col : c.columns)
            for (auto & p : col.perms)
                if (p.size() != c.k)
                    fail(ErrorKind::parse_error, "permutation size does not match k");
        return c;
    }

    namespace
    {
        auto failed(CheckReport & report, const std::string & reason) -> CheckReport
        {
            report.status = CheckStatus::failed;
            report.reason = reason;
            return report;
        }

        /// Confirms that no lower-1 columns cover, by the counting bound or a
        /// fresh search. Leaves report.status untouched on success.
        auto check_lower(CheckReport & report, int k, int lower, const CheckOptions & options) -> bool
        {
            auto counting = counting_lower_bound(k);
            if (lower < counting) {
                report.reason = "lower-bound: " + std::to_string(lower) + " is below the counting bound "
                    + std::to_string(counting);
                report.status = CheckStatus::failed;
                return false;
            }
            if (lower == counting) {
                report.lines.push_back("lower bound " + std::to_string(lower) + ": counting bound");
                return true;
            }
            if (k > 4) {
                report.reason = "lower-bound: no search available for k > 4";
                report.status = CheckStatus::failed;
                return false;
            }
            auto r = search_cover(k, lower - 1, SearchOptions{options.lower_budget, options.threads});
            if (r.decision == Decision::coverable) {
                report.reason = "lower-bound: " + std::to_string(lower - 1) + " columns already suffice";
                report.status = CheckStatus::failed;
                return false;
            }
            if (r.decision == Decision::exhausted) {
                report.reason = "budget: could not re-refute t = " + std::to_string(lower - 1) + " within "
                    + std::to_string(options.lower_budget) + " nodes";
                report.status = CheckStatus::budget_exhausted;
                return false;
            }
            report.lines.push_back("lower bound " + std::to_string(lower) + ": no covering by "
                    + std::to_string(lower - 1) + " columns (" + std::to_string(r.nodes) + " nodes)");
            return true;
        }
    }

    auto check_certificate(const nlohmann::json & j, const CheckOptions & options) -> CheckReport
    {
        CheckReport report;
        Certificate c;
        try {
            c = certificate_from_json(j);
        }
        catch (const Error & e) {
            return failed(report, std::string("malformed-certificate: ") + e.what());
        }

        if (! columns_cover_universe(c.k, c.columns))
            return failed(report, "coverage: the columns leave an assignment unblocked");
        report.lines.push_back("coverage: all " + std::to_string(assignment_count(c.k)) + " assignments blocked");

        auto cover = cover_from_columns(c.k, c.columns);
        if (auto colouring = find_coloring(cover))
            return failed(report, "solver: the induced cover of K_{" + std::to_string(c.k) + "," + std::to_string(c.t)
                    + "} has a colouring");
        report.lines.push_back("solver: cover of K_{" + std::to_string(c.k) + "," + std::to_string(c.t)
                + "} has no colouring");

        if (c.claim == "exact-mu") {
            if (c.lo && *c.lo != c.t)
                return failed(report, "malformed-certificate: exact claim with lo != t");
            if (! check_lower(report, c.k, c.t, options))
                return report;
            report.lines.push_back("mu(" + std::to_string(c.k) + ") = " + std::to_string(c.t));
        }
        else if (c.claim == "bracket") {
            if (! c.lo || *c.lo > c.t)
                return failed(report, "malformed-certificate: bracket needs lo <= t");
            if (! check_lower(report, c.k, *c.lo, options))
                return report;
            report.lines.push_back("mu(" + std::to_string(c.k) + ") in [" + std::to_string(*c.lo) + ", "
                    + std::to_string(c.t) + "]");
        }
        report.status = CheckStatus::verified;
        return report;
    }

    auto check_cover_document(const nlohmann::json & j) -> CheckReport
    {
        CheckReport report;
        std::optional<MatchingCover> cover;
        try {
            cover = cover_from_json(j);
        }
        catch (const Error & e) {
            return failed(report, std::string("malformed-cover: ") + e.what());
        }
        report.lines.push_back("cover: well-formed " + std::to_string(cover->fold()) + "-fold cover of a graph on "
                + std::to_string(cover->base_graph().vertex_count()) + " vertices");

        auto colouring = find_coloring(*cover);
        if (colouring && ! is_valid_coloring(*cover, *colouring))
            return failed(report, "solver: produced an invalid colouring");
        report.lines.push_back(colouring ? "solver: colourable" : "solver: no colouring");

        if (j.contains("claim")) {
            auto claim = j.at("claim");
            if (claim == "uncolorable" && colouring)
                return failed(report, "claim: cover claimed uncolorable has a colouring");
            if (claim == "colorable" && ! colouring)
                return failed(report, "claim: cover claimed colorable has no colouring");
            if (claim != "uncolorable" && claim != "colorable")
                return failed(report, "malformed-cover: unknown claim");
            report.lines.push_back("claim: " + claim.get<std::string>() + " confirmed");
        }
        report.status = CheckStatus::verified;
        return report;
    }

    auto check_document(const nlohmann::json & j, const CheckOptions & options) -> CheckReport
    {
        if (j.is_object() && j.contains("matchings"))
            return check_cover_document(j);
        if (j.is_object() && j.contains("columns"))
            return check_certificate(j, options);
        CheckReport report;
        return failed(report, "malformed-input: neither a cover nor a certificate");
    }
}
