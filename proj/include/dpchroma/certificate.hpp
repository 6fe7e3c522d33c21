#pragma once

#include <dpchroma/mu_search.hpp>

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dpchroma
{
    /// Self-contained record of a claim about mu(k):
    ///   "uncolorable": the t columns give an uncolourable cover of K_{k,t};
    ///   "exact-mu":    additionally no t-1 columns suffice, so mu(k) = t;
    ///   "bracket":     lo <= mu(k) <= t.
    struct Certificate
    {
        int k = 0;
        std::string claim;
        int t = 0;
        std::vector<ColumnClass> columns;
        bool verified = false;
        std::optional<int> lo;
        std::vector<RefutationRecord> log;
        std::uint64_t nodes = 0;
        std::optional<SearchFrontier> frontier;
        std::string method;
    };

    auto certificate_from_mu(const MuResult & r, bool verified) -> Certificate;
    auto mu_result_from_certificate(const Certificate & c) -> MuResult;

    auto certificate_to_json(const Certificate & c) -> nlohmann::json;
    /// Throws parse-error on missing or mistyped fields and invalid
    /// permutations.
    auto certificate_from_json(const nlohmann::json & j) -> Certificate;

    enum class CheckStatus
    {
        verified,
        failed,
        budget_exhausted
    };

    struct CheckReport
    {
        CheckStatus status = CheckStatus::failed;
        std::vector<std::string> lines;
        /// One line, "<code>: <detail>", when status is not verified.
        std::string reason;
    };

    struct CheckOptions
    {
        /// Node budget for re-running the covering search behind a lower bound.
        std::uint64_t lower_budget = 200'000'000;
        unsigned threads = 1;
    };

    /// Re-derives everything a certificate claims: coverage of all
    /// assignments, uncolourability of the induced cover through the
    /// backtracking solver, and any lower bound either by the counting bound
    /// or by re-running the covering search at one below it.
    auto check_certificate(const nlohmann::json & j, const CheckOptions & options = {}) -> CheckReport;

    /// Checks a cover file, including its optional colourability claim.
    auto check_cover_document(const nlohmann::json & j) -> CheckReport;

    /// Dispatches on the document shape.
    auto check_document(const nlohmann::json & j, const CheckOptions & options = {}) -> CheckReport;
}
