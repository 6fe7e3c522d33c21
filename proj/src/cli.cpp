#include <dpchroma/cli.hpp>

#include <dpchroma/bounds.hpp>
#include <dpchroma/cache.hpp>
#include <dpchroma/certificate.hpp>
#include <dpchroma/construct.hpp>
#include <dpchroma/dp_solver.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/formats.hpp>
#include <dpchroma/mu_search.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

namespace dpchroma
{
    namespace
    {
        // About an hour of k = 4 search on one core.
        constexpr std::uint64_t default_mu_budget = 60'000'000;
        constexpr std::uint64_t default_check_budget = 60'000'000;
        constexpr std::uint64_t default_chi_budget = 100'000'000;
        constexpr const char * default_cache_path = "./.dpchroma-cache.json";

        auto fixed(double x, int digits) -> std::string
        {
            std::ostringstream s;
            s << std::fixed << std::setprecision(digits) << x;
            return s.str();
        }

        /// mu values established by `mu --method exact`.
        auto known_mu(int k) -> std::optional<int>
        {
            switch (k) {
                case 1: return 1;
                case 2: return 2;
                case 3: return 6;
                default: return std::nullopt;
            }
        }

        auto parse_k_range(const std::string & text, int & first, int & last) -> bool
        {
            auto dash = text.find('-');
            try {
                std::size_t used = 0;
                if (dash == std::string::npos) {
                    first = last = std::stoi(text, &used);
                    return used == text.size();
                }
                first = std::stoi(text.substr(0, dash), &used);
                if (used != dash)
                    return false;
                auto rest = text.substr(dash + 1);
                last = std::stoi(rest, &used);
                return used == rest.size() && first <= last;
            }
            catch (const std::exception &) {
                return false;
            }
        }

        void print_table(std::ostream & out, const std::vector<std::vector<std::string>> & rows)
        {
            std::vector<std::size_t> width;
            for (auto & row : rows)
                for (std::size_t c = 0 ; c < row.size() ; ++c) {
                    if (width.size() <= c)
                        width.push_back(0);
                    width[c] = std::max(width[c], row[c].size());
                }
            for (auto & row : rows) {
                for (std::size_t c = 0 ; c < row.size() ; ++c) {
                    if (c != 0)
                        out << "  ";
                    out << std::setw(static_cast<int>(width[c])) << row[c];
                }
                out << "\n";
            }
        }

        auto report_check(std::ostream & out, std::ostream & err, const CheckReport & report) -> int
        {
            for (auto & line : report.lines)
                out << line << "\n";
            switch (report.status) {
                case CheckStatus::verified:
                    out << "verified\n";
                    return exit_code::success;
                case CheckStatus::budget_exhausted:
                    err << "error: " << report.reason << "\n";
                    return exit_code::budget_exhausted;
                case CheckStatus::failed:
                    break;
            }
            err << "error: " << report.reason << "\n";
            return exit_code::verification_failed;
        }

        struct Globals
        {
            unsigned threads = std::max(1u, std::thread::hardware_concurrency());
        };

        auto run_bounds(std::ostream & out, std::ostream & err, const std::string & k_text,
                std::optional<std::uint64_t> t, bool csv) -> int
        {
            int first, last;
            if (! parse_k_range(k_text, first, last)) {
                err << "error: usage: --k expects K or A-B\n";
                return exit_code::usage;
            }
            std::vector<std::vector<std::string>> rows{
                {"k", "list_threshold", "counting_lower", "mu_known", "theorem3_m", "analytic_upper"}};
            for (int k = first ; k <= last ; ++k) {
                auto r = bounds_report(k);
                auto m = t ? theorem3_m(k, *t) : r.theorem3_m_at_chosen_t;
                auto mu = known_mu(k);
                rows.push_back({std::to_string(k), to_string(r.list_threshold), to_string(r.counting_lower),
                        mu ? std::to_string(*mu) : "-", to_string(m), fixed(r.analytic_upper, 6)});
            }
            if (csv) {
                for (auto & row : rows) {
                    for (std::size_t c = 0 ; c < row.size() ; ++c)
                        out << (c ? "," : "") << row[c];
                    out << "\n";
                }
            }
            else {
                print_table(out, rows);
                if (! t)
                    out << "theorem3_m evaluated at t = ceil(k^k log(k!) / k!)\n";
                else
                    out << "theorem3_m evaluated at t = " << *t << "\n";
            }
            return exit_code::success;
        }

        /// Upper side of a mu result: coverage plus the backtracking solver.
        auto witness_verified(const MuResult & r) -> bool
        {
            if (r.witness_columns.empty() || ! columns_cover_universe(r.k, r.witness_columns))
                return false;
            return ! find_coloring(cover_from_columns(r.k, r.witness_columns)).has_value();
        }

        void print_mu(std::ostream & out, const MuResult & r, bool verified)
        {
            out << "k = " << r.k << "\n";
            out << "method = " << r.method << "\n";
            out << "counting_lower = " << counting_lower_bound(r.k) << "\n";
            for (auto & entry : r.impossibility_log)
                out << "refuted t = " << entry.t << " (" << entry.nodes << " nodes)\n";
            if (r.exact())
                out << "mu = " << r.hi << "\n";
            else
                out << "mu in [" << r.lo << ", " << r.hi << "]\n";
            if (r.frontier)
                out << "frontier: t = " << r.frontier->t << ", branch " << r.frontier->branch << "\n";
            out << "witness_columns = " << r.witness_columns.size() << "\n";
            out << "nodes = " << r.nodes << "\n";
            out << "verified = " << (verified ? "true" : "false") << "\n";
        }

        auto cached_result_usable(const nlohmann::json & j, int k, std::uint64_t budget, unsigned threads) -> bool
        {
            auto report = check_certificate(j, CheckOptions{std::min<std::uint64_t>(budget, 10'000'000), threads});
            if (report.status == CheckStatus::verified)
                return true;
            if (report.status != CheckStatus::budget_exhausted)
                return false;
            // Lower side too costly to redo: accept only a log refuting every
            // t from the counting bound up to lo - 1.
            auto c = certificate_from_json(j);
            if (! c.lo)
                return false;
            int expected = counting_lower_bound(k);
            for (auto & entry : c.log)
                if (entry.t == expected)
                    ++expected;
            return expected >= *c.lo;
        }

        auto run_mu(std::ostream & out, std::ostream & err, const Globals & globals, int k, const std::string & method,
                std::uint64_t budget, const std::string & out_path, const std::string & cache_path, bool use_cache,
                const std::string & resume_path) -> int
        {
            if (method == "exact" && (k < 1 || k > 4)) {
                err << "error: invalid-parameter: exact search supports 1 <= k <= 4; use --method greedy\n";
                return exit_code::usage;
            }
            if (method == "greedy" && (k < 1 || k > 6)) {
                err << "error: invalid-parameter: greedy supports 1 <= k <= 6\n";
                return exit_code::usage;
            }

            std::optional<MuResult> result;
            std::optional<ResultCache> cache;
            if (use_cache && resume_path.empty()) {
                cache.emplace(cache_path);
                if (auto hit = cache->lookup(k, method, budget)) {
                    if (cached_result_usable(*hit, k, budget, globals.threads)) {
                        result = mu_result_from_certificate(certificate_from_json(*hit));
                        err << "cache: reused " << ResultCache::key(k, method, budget) << "\n";
                    }
                    else
                        err << "cache: discarded invalid entry " << ResultCache::key(k, method, budget) << "\n";
                }
            }

            if (! result) {
                if (method == "greedy")
                    result = mu_greedy(k);
                else {
                    std::optional<MuResult> resume;
                    if (! resume_path.empty())
                        resume = mu_result_from_certificate(certificate_from_json(read_json_file(resume_path)));
                    result = mu_exact(k, SearchOptions{budget, globals.threads}, resume ? &*resume : nullptr);
                }
            }

            bool verified = witness_verified(*result);
            print_mu(out, *result, verified);
            auto cert = certificate_to_json(certificate_from_mu(*result, verified));
            if (! out_path.empty())
                write_text_file(out_path, dump_json(cert));
            if (cache && verified)
                cache->store(k, method, budget, cert);

            if (! verified)
                return exit_code::verification_failed;
            if (result->frontier)
                return exit_code::budget_exhausted;
            return exit_code::success;
        }

        auto run_construct(std::ostream & out, std::ostream & err, int k, std::optional<int> t_option,
                std::uint64_t seed, bool random, const std::string & out_path) -> int
        {
            if (k < 1 || k > 6) {
                err << "error: invalid-parameter: construct supports 1 <= k <= 6\n";
                return exit_code::usage;
            }
            auto bounds = bounds_report(k);
            int t = t_option ? *t_option : std::max<int>(1, static_cast<int>(bounds.chosen_t));
            if (t < 1) {
                err << "error: invalid-parameter: t must be positive\n";
                return exit_code::usage;
            }

            auto base = random ? random_cover(k, t, seed) : derandomized_cover(k, t);
            auto survivors = surviving_assignments(base).count();
            auto extended = extend_to_uncolorable(base);
            auto m = theorem3_m(k, static_cast<std::uint64_t>(t));
            bool uncolourable = ! find_coloring(extended.cover).has_value();

            out << "k = " << k << "\n";
            out << "t = " << t << "\n";
            out << "mode = " << (random ? "random" : "derandomized") << "\n";
            if (random)
                out << "seed = " << seed << "\n";
            out << "expected_survivors = " << fixed(expected_survivors(k, static_cast<std::uint64_t>(t)), 6) << "\n";
            out << "survivors = " << survivors << "\n";
            out << "added_vertices = " << extended.added << "\n";
            out << "right_side = " << t + extended.added << "\n";
            out << "theorem3_m = " << to_string(m) << "\n";
            out << "verified_uncolorable = " << (uncolourable ? "true" : "false") << "\n";

            if (! out_path.empty())
                write_text_file(out_path, dump_json(cover_to_json(extended.cover,
                                uncolourable ? std::optional<std::string>("uncolorable") : std::nullopt)));
            return uncolourable ? exit_code::success : exit_code::verification_failed;
        }

        auto run_check(std::ostream & out, std::ostream & err, const Globals & globals, const std::string & path,
                std::uint64_t budget) -> int
        {
            nlohmann::json doc;
            try {
                doc = read_json_file(path);
            }
            catch (const Error & e) {
                err << "error: " << e.what() << "\n";
                return exit_code::verification_failed;
            }
            return report_check(out, err, check_document(doc, CheckOptions{budget, globals.threads}));
        }

        auto run_chi_dp(std::ostream & out, std::ostream & err, const Globals & globals, const std::string & path,
                std::optional<int> max_k, std::uint64_t budget) -> int
        {
            std::ifstream in(path);
            if (! in) {
                err << "error: parse-error: cannot open " << path << "\n";
                return exit_code::usage;
            }
            auto g = read_graph_text(in);
            int limit = max_k ? *max_k : colouring_number(g);
            try {
                auto value = chi_dp_exact(g, limit, EnumerationOptions{budget, globals.threads});
                if (value > limit)
                    out << "chi_dp > " << limit << "\n";
                else
                    out << "chi_dp = " << value << "\n";
                return exit_code::success;
            }
            catch (const ResourceLimit & e) {
                out << "chi_dp in [" << e.lo << ", " << e.hi << "]\n";
                err << "error: " << e.what() << "\n";
                return exit_code::budget_exhausted;
            }
        }

        auto run_estimate(std::ostream & out, const Globals & globals, int k, int t, std::uint64_t samples,
                std::uint64_t seed) -> int
        {
            auto survivors = monte_carlo_survivors(k, t, samples, seed, globals.threads);
            auto expected = expected_survivors(k, static_cast<std::uint64_t>(t));
            auto bad = monte_carlo_bad_prob(k, samples, seed, globals.threads);
            auto target = bounds_report(k).bad_prob;
            auto z = [] (double estimate, double se, double truth) {
                return se > 0 ? (estimate - truth) / se : (estimate == truth ? 0.0 : INFINITY);
            };

            out << "k = " << k << "\n";
            out << "t = " << t << "\n";
            out << "samples = " << samples << "\n";
            out << "seed = " << seed << "\n";
            out << "survivors_mean = " << fixed(survivors.mean, 6) << "\n";
            out << "survivors_stderr = " << fixed(survivors.standard_error, 6) << "\n";
            out << "survivors_expected = " << fixed(expected, 6) << "\n";
            out << "survivors_z = " << fixed(z(survivors.mean, survivors.standard_error, expected), 3) << "\n";
            out << "bad_prob_estimate = " << fixed(bad.mean, 6) << "\n";
            out << "bad_prob_stderr = " << fixed(bad.standard_error, 6) << "\n";
            out << "bad_prob_expected = " << fixed(target, 6) << "\n";
            out << "bad_prob_z = " << fixed(z(bad.mean, bad.standard_error, target), 3) << "\n";
            return exit_code::success;
        }

        auto run_lemma1(std::ostream & out, int k, bool exhaustive, std::optional<std::uint64_t> samples,
                std::uint64_t seed) -> int
        {
            bool use_exhaustive = exhaustive || (! samples && k <= 4);
            auto report = use_exhaustive ? verify_lemma1_exhaustive(k)
                : verify_lemma1_sampled(k, samples.value_or(1000), seed);
            out << "k = " << k << "\n";
            out << "mode = " << report.mode << "\n";
            out << "columns = " << report.columns_checked << "\n";
            out << "k! = " << report.factorial << "\n";
            out << "min_population = " << report.min_population << "\n";
            out << "max_population = " << report.max_population << "\n";
            out << "injection_collisions = " << report.injection_collisions << "\n";
            out << "holds = " << (report.holds() ? "true" : "false") << "\n";
            return report.holds() ? exit_code::success : exit_code::verification_failed;
        }
    }

    auto run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int
    {
        CLI::App app{"Exact DP-chromatic thresholds for complete bipartite graphs", "dpchroma"};
        app.require_subcommand(1);
        app.fallthrough();
        Globals globals;
        app.add_option("--threads", globals.threads, "Worker threads")->check(CLI::PositiveNumber);

        auto bounds = app.add_subcommand("bounds", "Closed-form bounds table");
        std::string bounds_k;
        std::optional<std::uint64_t> bounds_t;
        bool bounds_csv = false;
        bounds->add_option("--k", bounds_k, "k, or a range A-B")->required();
        bounds->add_option("--t", bounds_t, "Evaluate theorem3_m at this t");
        bounds->add_flag("--csv", bounds_csv, "CSV output");

        auto mu = app.add_subcommand("mu", "Compute mu(k)");
        int mu_k = 0;
        std::string mu_method = "exact";
        std::uint64_t mu_budget = default_mu_budget;
        std::string mu_out, mu_cache = default_cache_path, mu_resume;
        bool mu_no_cache = false;
        mu->add_option("--k", mu_k)->required();
        mu->add_option("--method", mu_method)->check(CLI::IsMember({"exact", "greedy"}));
        mu->add_option("--budget", mu_budget, "Search node budget");
        mu->add_option("--out", mu_out, "Certificate file to write");
        mu->add_option("--cache", mu_cache, "Results cache file");
        mu->add_flag("--no-cache", mu_no_cache, "Do not read or write the cache");
        mu->add_option("--resume", mu_resume, "Continue from a bracket certificate");

        auto construct = app.add_subcommand("construct", "Build an uncolourable cover of K_{k,m}");
        int construct_k = 0;
        std::optional<int> construct_t;
        std::uint64_t construct_seed = 1;
        bool construct_random = false, construct_derandomize = false;
        std::string construct_out;
        construct->add_option("--k", construct_k)->required();
        construct->add_option("--t", construct_t);
        construct->add_option("--seed", construct_seed);
        auto random_flag = construct->add_flag("--random", construct_random);
        construct->add_flag("--derandomize", construct_derandomize)->excludes(random_flag);
        construct->add_option("--out", construct_out);

        auto check = app.add_subcommand("check", "Re-verify a cover or certificate file");
        std::string check_path;
        std::uint64_t check_budget = default_check_budget;
        check->add_option("file", check_path)->required();
        check->add_option("--budget", check_budget, "Node budget for re-running lower-bound searches");

        auto chi = app.add_subcommand("chi-dp", "Exact DP-chromatic number of a small graph");
        std::string chi_path;
        std::optional<int> chi_max_k;
        std::uint64_t chi_budget = default_chi_budget;
        chi->add_option("graph-file", chi_path)->required();
        chi->add_option("--max-k", chi_max_k);
        chi->add_option("--budget", chi_budget, "Maximum normalized covers examined");

        auto estimate = app.add_subcommand("estimate", "Monte Carlo check of the random-cover probabilities");
        int estimate_k = 0, estimate_t = 0;
        std::uint64_t estimate_samples = 0, estimate_seed = 0;
        estimate->add_option("--k", estimate_k)->required();
        estimate->add_option("--t", estimate_t)->required();
        estimate->add_option("--samples", estimate_samples)->required();
        estimate->add_option("--seed", estimate_seed)->required();

        auto lemma1 = app.add_subcommand("lemma1", "Check the blocked-set cardinality and injection");
        int lemma1_k = 0;
        bool lemma1_exhaustive = false;
        std::optional<std::uint64_t> lemma1_samples;
        std::uint64_t lemma1_seed = 1;
        lemma1->add_option("--k", lemma1_k)->required();
        auto exhaustive_flag = lemma1->add_flag("--exhaustive", lemma1_exhaustive);
        lemma1->add_option("--samples", lemma1_samples)->excludes(exhaustive_flag);
        lemma1->add_option("--seed", lemma1_seed);

        std::vector<const char *> argv{"dpchroma"};
        for (auto & a : args)
            argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        }
        catch (const CLI::Success &) {
            out << app.help();
            return exit_code::success;
        }
        catch (const CLI::ParseError & e) {
            err << "error: usage: " << e.what() << "\n";
            return exit_code::usage;
        }

        try {
            if (*bounds)
                return run_bounds(out, err, bounds_k, bounds_t, bounds_csv);
            if (*mu)
                return run_mu(out, err, globals, mu_k, mu_method, mu_budget, mu_out, mu_cache, ! mu_no_cache, mu_resume);
            if (*construct)
                return run_construct(out, err, construct_k, construct_t, construct_seed, construct_random, construct_out);
            if (*check)
                return run_check(out, err, globals, check_path, check_budget);
            if (*chi)
                return run_chi_dp(out, err, globals, chi_path, chi_max_k, chi_budget);
            if (*estimate)
                return run_estimate(out, globals, estimate_k, estimate_t, estimate_samples, estimate_seed);
            if (*lemma1)
                return run_lemma1(out, lemma1_k, lemma1_exhaustive, lemma1_samples, lemma1_seed);
        }
        catch (const ResourceLimit & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::budget_exhausted;
        }
        catch (const Error & e) {
            err << "error: " << e.what() << "\n";
            return exit_code::usage;
        }
        return exit_code::usage;
    }
}
