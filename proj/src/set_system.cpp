#include "set_system.hpp"

#include <dpchroma/error.hpp>

#include <bit>
#include <map>
#include <numeric>

namespace dpchroma::detail
{
    auto SetSystem::build(int k) -> SetSystem
    {
        if (k < 1 || k > 4)
            fail(ErrorKind::resource_limit, "set system supports 1 <= k <= 4");

        SetSystem sys;
        sys.k = k;
        sys.universe = assignment_count(k);
        sys.words = (sys.universe + 63) / 64;
        sys.set_size = factorial(k);

        std::map<std::vector<std::uint64_t>, std::uint32_t> seen;
        std::uint64_t index = 0;
        for_each_column_class(k, [&] (const ColumnClass & col) {
            auto b = blocked_set(col);
            std::vector<std::uint64_t> key(b.words().begin(), b.words().end());
            if (seen.emplace(key, static_cast<std::uint32_t>(sys.representative.size())).second) {
                sys.representative.push_back(index);
                sys.bits.insert(sys.bits.end(), key.begin(), key.end());
                std::vector<std::uint32_t> elems;
                for (auto e : b.ones())
                    elems.push_back(static_cast<std::uint32_t>(e));
                sys.elements.push_back(std::move(elems));
            }
            ++index;
        });
        return sys;
    }

    auto identity_stabiliser_orbits(const SetSystem & sys) -> std::vector<std::uint32_t>
    {
        int k = sys.k;
        auto perms = all_permutations(k);

        std::map<std::vector<std::uint64_t>, std::uint32_t> lookup;
        for (std::size_t s = 0 ; s < sys.set_count() ; ++s)
            lookup.emplace(std::vector<std::uint64_t>(sys.set(s), sys.set(s) + sys.words), static_cast<std::uint32_t>(s));

        // Element maps f -> (tau(f[rho(i)]))_i for every pair (tau, rho).
        std::vector<std::vector<std::uint32_t>> maps;
        for (auto & tau : perms)
            for (auto & rho : perms) {
                std::vector<std::uint32_t> m(sys.universe);
                for (std::uint64_t f = 0 ; f < sys.universe ; ++f) {
                    auto colors = decode_assignment(k, f);
                    std::vector<int> image(k);
                    for (int i = 0 ; i < k ; ++i)
                        image[i] = tau(colors[rho(i)]);
                    m[f] = static_cast<std::uint32_t>(encode_assignment(k, image));
                }
                maps.push_back(std::move(m));
            }

        constexpr auto unassigned = ~std::uint32_t{0};
        std::vector<std::uint32_t> orbit(sys.set_count(), unassigned);
        std::uint32_t next_rank = 0;
        for (std::size_t s = 0 ; s < sys.set_count() ; ++s) {
            if (orbit[s] != unassigned)
                continue;
            auto rank = next_rank++;
            for (auto & m : maps) {
                std::vector<std::uint64_t> image(sys.words, 0);
                for (auto e : sys.elements[s])
                    image[m[e] / 64] |= std::uint64_t{1} << (m[e] % 64);
                auto it = lookup.find(image);
                if (it == lookup.end())
                    fail(ErrorKind::invalid_parameter, "relabelling produced a set that is not a blocked set");
                orbit[it->second] = rank;
            }
        }
        return orbit;
    }
}
