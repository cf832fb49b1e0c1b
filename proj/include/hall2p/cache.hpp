#pragma once

/* Result cache: versioned JSON blobs keyed by a content hash of
 * (quiver spec, q, code-version tag, table name).  Writes replace the file
 * atomically; stale or corrupt entries are discarded with a warning and
 * recomputed. */

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hall2p/json_io.hpp"

namespace hall2p {

inline constexpr const char* kCacheVersion = "hall2p-1";

inline std::string fnv1a_hex(const std::string& s)
{
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

class FileCache {
public:
    FileCache(std::string dir, std::string quiver_spec, unsigned q)
        : dir_(std::move(dir)), quiver_(std::move(quiver_spec)), q_(q)
    {
        if (!dir_.empty())
            std::filesystem::create_directories(dir_);
    }

    bool enabled() const { return !dir_.empty(); }

    std::optional<json> load(const std::string& name) const
    {
        if (!enabled())
            return std::nullopt;
        auto p = path(name);
        std::ifstream f(p);
        if (!f)
            return std::nullopt;
        try {
            json j = json::parse(f);
            if (j.at("version") != kCacheVersion || j.at("q") != q_ ||
                j.at("quiver") != quiver_ || j.at("name") != name) {
                std::cerr << "cache: stale entry ignored: " << p << "\n";
                return std::nullopt;
            }
            return j.at("payload");
        } catch (const std::exception& e) {
            std::cerr << "cache: corrupt entry discarded (" << e.what()
                      << "): " << p << "\n";
            return std::nullopt;
        }
    }

    void store(const std::string& name, const json& payload) const
    {
        if (!enabled())
            return;
        json j{{"version", kCacheVersion},
               {"q", q_},
               {"quiver", quiver_},
               {"name", name},
               {"payload", payload}};
        auto p = path(name);
        auto tmp = p;
        tmp += ".tmp";
        {
            std::ofstream f(tmp);
            f << j.dump(1) << "\n";
        }
        std::filesystem::rename(tmp, p);
    }

    std::filesystem::path path(const std::string& name) const
    {
        std::string key =
            fnv1a_hex(std::string(kCacheVersion) + "\x1f" + quiver_ + "\x1f" +
                      std::to_string(q_) + "\x1f" + name);
        return std::filesystem::path(dir_) / (name + "-" + key + ".json");
    }

private:
    std::string dir_;
    std::string quiver_;
    unsigned q_;
};

} // namespace hall2p
