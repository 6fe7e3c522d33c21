#include <dpchroma/cache.hpp>
#include <dpchroma/formats.hpp>

#include <fstream>

namespace dpchroma
{
    ResultCache::ResultCache(std::string path) :
        _path(std::move(path)),
        _entries(nlohmann::json::object())
    {
        std::ifstream in(_path);
        if (! in)
            return;
        auto parsed = nlohmann::json::parse(in, nullptr, false);
        if (parsed.is_object() && parsed.contains("entries") && parsed["entries"].is_object())
            _entries = parsed["entries"];
    }

    auto ResultCache::key(int k, const std::string & method, std::uint64_t budget) -> std::string
    {
        return "k=" + std::to_string(k) + ";method=" + method + ";budget=" + std::to_string(budget);
    }

    auto ResultCache::lookup(int k, const std::string & method, std::uint64_t budget) const -> std::optional<nlohmann::json>
    {
        auto it = _entries.find(key(k, method, budget));
        if (it == _entries.end())
            return std::nullopt;
        return *it;
    }

    void ResultCache::store(int k, const std::string & method, std::uint64_t budget, const nlohmann::json & certificate)
    {
        _entries[key(k, method, budget)] = certificate;
        nlohmann::json doc;
        doc["entries"] = _entries;
        write_text_file(_path, dump_json(doc));
    }
}
