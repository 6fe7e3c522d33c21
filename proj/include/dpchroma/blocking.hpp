#pragma once

#include <dpchroma/assignment.hpp>
#include <dpchroma/bitvector.hpp>
#include <dpchroma/cover.hpp>
#include <dpchroma/permutation.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dpchroma
{
    /// The k permutations joining each left fibre of K_{k,t} to one right
    /// fibre; perms[i] sends colour c of left vertex i to a right colour.
    struct ColumnClass
    {
        std::vector<Permutation> perms;
        bool canonical = false;

        auto size() const -> int { return static_cast<int>(perms.size()); }
        auto operator==(const ColumnClass & other) const -> bool { return perms == other.perms; }
    };

    /// Validates sizes and sets the canonical flag.
    auto make_column(std::vector<Permutation> perms) -> ColumnClass;

    /// Relabels the right fibre so that perms[0] becomes the identity.
    auto canonicalize(const ColumnClass & col) -> ColumnClass;

    /// Bit f is set iff assignment f is blocked (bad) for the column.
    using BlockedSet = BitVector;

    /// True iff i -> perms[i](f[i]) hits every right colour.
    auto is_bad_for(const Assignment & f, const ColumnClass & col) -> bool;

    /// The injection of a blocked assignment into the bijections [k] -> [k],
    /// or nullopt when f is not blocked.
    auto blocking_permutation(const Assignment & f, const ColumnClass & col) -> std::optional<Permutation>;

    auto blocked_set(const ColumnClass & col) -> BlockedSet;

    /// (k!)^(k-1)
    auto column_class_count(int k) -> std::uint64_t;

    /// Canonical column with the given position in lexicographic order, the
    /// order being perms[1] most significant, each permutation by lex rank.
    auto column_from_index(int k, std::uint64_t index) -> ColumnClass;
    auto column_index(const ColumnClass & canonical_col) -> std::uint64_t;

    /// All canonical columns in lexicographic order. Throws resource-limit
    /// for k > 4, where the list no longer fits in memory comfortably.
    auto enumerate_column_classes(int k) -> std::vector<ColumnClass>;

    /// Calls visit on every canonical column in order without storing them.
    void for_each_column_class(int k, const std::function<void (const ColumnClass &)> & visit);

    /// The cover of K_{k, cols.size()} whose j-th right vertex is joined by
    /// cols[j].
    auto cover_from_columns(int k, const std::vector<ColumnClass> & cols) -> MatchingCover;

    /// Reads the column at each right vertex of a cover of K_{k,t}; throws
    /// unsupported-input for any other base graph.
    auto columns_of(const MatchingCover & c) -> std::vector<ColumnClass>;

    struct Lemma1Report
    {
        int k = 0;
        std::string mode;
        std::uint64_t columns_checked = 0;
        std::uint64_t min_population = 0;
        std::uint64_t max_population = 0;
        std::uint64_t injection_collisions = 0;
        std::uint64_t factorial = 0;

        /// max <= k! and, for perfect-matching columns, min == max == k!.
        auto holds() const -> bool
        {
            return columns_checked > 0 && max_population <= factorial && min_population == factorial
                && max_population == factorial && injection_collisions == 0;
        }
    };

    /// Exhaustive over all canonical columns; k <= 4.
    auto verify_lemma1_exhaustive(int k) -> Lemma1Report;

    /// Uniform random columns from the seeded per-sample streams; k <= 8.
    auto verify_lemma1_sampled(int k, std::uint64_t samples, std::uint64_t seed) -> Lemma1Report;
}
