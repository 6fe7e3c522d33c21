#include <dpchroma/blocking.hpp>
#include <dpchroma/error.hpp>
#include <dpchroma/rng.hpp>

#include <algorithm>
#include <limits>
#include <map>
#include <string>

namespace dpchroma
{
    auto make_column(std::vector<Permutation> perms) -> ColumnClass
    {
        int k = static_cast<int>(perms.size());
        if (k < 1)
            fail(ErrorKind::invalid_parameter, "a column needs at least one permutation");
        for (auto & p : perms)
            if (p.size() != k)
                fail(ErrorKind::invalid_parameter, "column permutations must all have size k = " + std::to_string(k));
        bool canonical = perms[0].is_identity();
        return ColumnClass{std::move(perms), canonical};
    }

    auto canonicalize(const ColumnClass & col) -> ColumnClass
    {
        auto relabel = invert(col.perms.at(0));
        std::vector<Permutation> perms;
        for (auto & p : col.perms)
            perms.push_back(compose(relabel, p));
        return make_column(std::move(perms));
    }

    auto blocking_permutation(const Assignment & f, const ColumnClass & col) -> std::optional<Permutation>
    {
        int k = col.size();
        if (f.size() != k)
            fail(ErrorKind::invalid_parameter, "assignment and column sizes differ");
        std::vector<int> image(k);
        std::vector<bool> hit(k, false);
        for (int i = 0 ; i < k ; ++i) {
            image[i] = col.perms[i](f.color(i));
            if (hit[image[i]])
                return std::nullopt;
            hit[image[i]] = true;
        }
        return Permutation(std::move(image));
    }

    auto is_bad_for(const Assignment & f, const ColumnClass & col) -> bool
    {
        return blocking_permutation(f, col).has_value();
    }

    auto blocked_set(const ColumnClass & col) -> BlockedSet
    {
        int k = col.size();
        BlockedSet result(assignment_count(k));
        std::vector<std::vector<int>> inverses;
        for (auto & p : col.perms)
            inverses.push_back(invert(p).image());

        // f is blocked iff f[i] = perms[i]^-1(pi(i)) for some bijection pi.
        std::vector<int> pi(k);
        for (int i = 0 ; i < k ; ++i)
            pi[i] = i;
        std::vector<std::uint64_t> weight(k, 1);
        for (int i = 1 ; i < k ; ++i)
            weight[i] = weight[i - 1] * k;
        do {
            std::uint64_t index = 0;
            for (int i = 0 ; i < k ; ++i)
                index += weight[i] * inverses[i][pi[i]];
            result.set(index);
        } while (std::next_permutation(pi.begin(), pi.end()));
        return result;
    }

    auto column_class_count(int k) -> std::uint64_t
    {
        if (k < 1)
            fail(ErrorKind::invalid_parameter, "k must be positive");
        std::uint64_t f = factorial(k), result = 1;
        for (int i = 1 ; i < k ; ++i) {
            if (result > std::numeric_limits<std::uint64_t>::max() / f)
                fail(ErrorKind::resource_limit, "column class count overflows");
            result *= f;
        }
        return result;
    }

    auto column_from_index(int k, std::uint64_t index) -> ColumnClass
    {
        if (index >= column_class_count(k))
            fail(ErrorKind::invalid_parameter, "column index out of range");
        auto f = factorial(k);
        std::vector<Permutation> perms(k, Permutation::identity(k));
        for (int i = k - 1 ; i >= 1 ; --i) {
            perms[i] = permutation_from_rank(k, index % f);
            index /= f;
        }
        return make_column(std::move(perms));
    }

    auto column_index(const ColumnClass & col) -> std::uint64_t
    {
        if (! col.perms.at(0).is_identity())
            fail(ErrorKind::invalid_parameter, "column_index needs a canonical column");
        auto f = factorial(col.size());
        std::uint64_t index = 0;
        for (int i = 1 ; i < col.size() ; ++i)
            index = index * f + lex_rank(col.perms[i]);
        return index;
    }

    void for_each_column_class(int k, const std::function<void (const ColumnClass &)> & visit)
    {
        if (k < 1 || k > 5)
            fail(ErrorKind::resource_limit, "column enumeration supports 1 <= k <= 5");
        auto perms = all_permutations(k);
        std::vector<std::size_t> digits(k, 0);
        auto count = column_class_count(k);
        for (std::uint64_t c = 0 ; c < count ; ++c) {
            std::vector<Permutation> column;
            for (int i = 0 ; i < k ; ++i)
                column.push_back(perms[digits[i]]);
            visit(make_column(std::move(column)));
            for (int i = k - 1 ; i >= 1 ; --i) {
                digits[i] = (digits[i] + 1) % perms.size();
                if (digits[i] != 0)
                    break;
            }
        }
    }

    auto enumerate_column_classes(int k) -> std::vector<ColumnClass>
    {
        if (k < 1 || k > 4)
            fail(ErrorKind::resource_limit, "materialised column enumeration supports 1 <= k <= 4");
        std::vector<ColumnClass> result;
        result.reserve(column_class_count(k));
        for_each_column_class(k, [&] (const ColumnClass & c) { result.push_back(c); });
        return result;
    }

    auto cover_from_columns(int k, const std::vector<ColumnClass> & cols) -> MatchingCover
    {
        if (cols.empty())
            fail(ErrorKind::invalid_parameter, "need at least one column");
        auto g = complete_bipartite(k, static_cast<int>(cols.size()));
        std::map<Edge, Permutation> perms;
        for (std::size_t j = 0 ; j < cols.size() ; ++j) {
            if (cols[j].size() != k)
                fail(ErrorKind::invalid_parameter, "column size does not match k");
            for (int i = 0 ; i < k ; ++i)
                perms.emplace(Edge{i, k + static_cast<int>(j)}, cols[j].perms[i]);
        }
        return build_cover(std::move(g), k, perms);
    }

    auto columns_of(const MatchingCover & c) -> std::vector<ColumnClass>
    {
        auto & g = c.base_graph();
        int k = c.fold();
        auto & parts = g.bipartition();
        if (! parts || static_cast<int>(parts->left.size()) != k || parts->right.empty())
            fail(ErrorKind::unsupported_input, "expected a cover of K_{k,t} whose left side has fold-many vertices");
        int t = static_cast<int>(parts->right.size());
        if (g != complete_bipartite(k, t))
            fail(ErrorKind::unsupported_input, "expected the standard labelling of K_{k,t}");

        std::vector<ColumnClass> result;
        for (int j = 0 ; j < t ; ++j) {
            std::vector<Permutation> perms;
            for (int i = 0 ; i < k ; ++i)
                perms.push_back(c.permutation(*g.edge_index(i, k + j)));
            result.push_back(make_column(std::move(perms)));
        }
        return result;
    }

    namespace
    {
        /// Scans every assignment through is_bad_for, independently of the
        /// bijection enumeration used by blocked_set.
        void record_column(const ColumnClass & col, Lemma1Report & report)
        {
            int k = col.size();
            auto universe = assignment_count(k);
            std::uint64_t population = 0;
            std::vector<bool> image_used(factorial(k), false);
            for (std::uint64_t f = 0 ; f < universe ; ++f) {
                auto sigma = blocking_permutation(Assignment::from_index(k, f), col);
                if (! sigma)
                    continue;
                ++population;
                auto rank = lex_rank(*sigma);
                if (image_used[rank])
                    ++report.injection_collisions;
                image_used[rank] = true;
            }
            if (report.columns_checked == 0) {
                report.min_population = population;
                report.max_population = population;
            }
            else {
                report.min_population = std::min(report.min_population, population);
                report.max_population = std::max(report.max_population, population);
            }
            ++report.columns_checked;
        }
    }

    auto verify_lemma1_exhaustive(int k) -> Lemma1Report
    {
        if (k < 1 || k > 4)
            fail(ErrorKind::invalid_parameter, "exhaustive Lemma 1 check supports 1 <= k <= 4");
        Lemma1Report report;
        report.k = k;
        report.mode = "exhaustive";
        report.factorial = factorial(k);
        for_each_column_class(k, [&] (const ColumnClass & c) { record_column(c, report); });
        return report;
    }

    auto verify_lemma1_sampled(int k, std::uint64_t samples, std::uint64_t seed) -> Lemma1Report
    {
        if (k < 1 || k > 6)
            fail(ErrorKind::invalid_parameter, "sampled Lemma 1 check supports 1 <= k <= 6");
        if (samples == 0)
            fail(ErrorKind::invalid_parameter, "need at least one sample");
        Lemma1Report report;
        report.k = k;
        report.mode = "sampled";
        report.factorial = factorial(k);
        for (std::uint64_t s = 0 ; s < samples ; ++s) {
            auto rng = substream(seed, {s});
            std::vector<Permutation> perms;
            for (int i = 0 ; i < k ; ++i)
                perms.push_back(random_permutation(rng, k));
            record_column(make_column(std::move(perms)), report);
        }
        return report;
    }
}
