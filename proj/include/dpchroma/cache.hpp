#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace dpchroma
{
    /// Single-file store of mu certificates keyed by (k, method, budget). A
    /// missing or unreadable file behaves as an empty cache; callers
    /// revalidate entries before trusting them.
    class ResultCache
    {
        public:
            explicit ResultCache(std::string path);

            auto lookup(int k, const std::string & method, std::uint64_t budget) const -> std::optional<nlohmann::json>;
            void store(int k, const std::string & method, std::uint64_t budget, const nlohmann::json & certificate);

            static auto key(int k, const std::string & method, std::uint64_t budget) -> std::string;

        private:
            std::string _path;
            nlohmann::json _entries;
    };
}
