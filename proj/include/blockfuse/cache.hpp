#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blockfuse/algebra.hpp"
#include "blockfuse/perm_group.hpp"

namespace blockfuse {

inline constexpr int kCacheVersion = 1;

// On-disk record of the field-independent data of one (kind, n, p) context:
// the class table and the exact integer structure constants.
struct CacheRecord {
    int version = kCacheVersion;
    char kind = 's';
    int n = 0;
    unsigned p = 0;
    struct ClassRow {
        std::string rep;
        std::uint64_t size = 0;
        std::string tag;  // "", "+", "-"
    };
    std::vector<ClassRow> classes;
    std::vector<std::array<std::int64_t, 4>> constants;  // (i, j, l, count), count != 0
};

inline std::string cache_file_name(char kind, int n, unsigned p) {
    return std::string(1, kind) + std::to_string(n) + "_p" + std::to_string(p) + ".v" +
           std::to_string(kCacheVersion) + ".json";
}

inline CacheRecord make_cache_record(const AlgebraContext& ctx, char kind) {
    CacheRecord rec;
    rec.kind = kind;
    rec.n = ctx.group().degree();
    rec.p = ctx.prime();
    for (const auto& c : ctx.group().classes())
        rec.classes.push_back({format_cycles(c.rep), c.size, split_suffix(c.tag)});
    int d = ctx.dim();
    const auto& cube = ctx.constants();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int l = 0; l < d; ++l) {
                std::int64_t v = cube[(static_cast<std::size_t>(i) * d + j) * d + l];
                if (v != 0) rec.constants.push_back({i, j, l, v});
            }
    return rec;
}

// write temp then rename, so concurrent readers never see a partial file
inline void store_cache(const std::filesystem::path& dir, const CacheRecord& rec) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    nlohmann::json j;
    j["version"] = rec.version;
    j["kind"] = std::string(1, rec.kind);
    j["n"] = rec.n;
    j["p"] = rec.p;
    nlohmann::json cls = nlohmann::json::array();
    for (const auto& c : rec.classes) cls.push_back({{"rep", c.rep}, {"size", c.size}, {"tag", c.tag}});
    j["classes"] = std::move(cls);
    nlohmann::json cons = nlohmann::json::array();
    for (const auto& q : rec.constants) cons.push_back({q[0], q[1], q[2], q[3]});
    j["constants"] = std::move(cons);

    fs::path target = dir / cache_file_name(rec.kind, rec.n, rec.p);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump();
    }
    fs::rename(tmp, target);
}

inline std::optional<CacheRecord> load_cache(const std::filesystem::path& dir, char kind, int n, unsigned p) {
    namespace fs = std::filesystem;
    fs::path target = dir / cache_file_name(kind, n, p);
    if (!fs::exists(target)) return std::nullopt;
    try {
        std::ifstream in(target);
        nlohmann::json j = nlohmann::json::parse(in);
        CacheRecord rec;
        rec.version = j.at("version").get<int>();
        if (rec.version != kCacheVersion) {
            std::cerr << "blockfuse: cache version mismatch in " << target << ", recomputing\n";
            return std::nullopt;
        }
        rec.kind = j.at("kind").get<std::string>().at(0);
        rec.n = j.at("n").get<int>();
        rec.p = j.at("p").get<unsigned>();
        if (rec.kind != kind || rec.n != n || rec.p != p) {
            std::cerr << "blockfuse: cache key mismatch in " << target << ", recomputing\n";
            return std::nullopt;
        }
        for (const auto& c : j.at("classes"))
            rec.classes.push_back(
                {c.at("rep").get<std::string>(), c.at("size").get<std::uint64_t>(), c.at("tag").get<std::string>()});
        for (const auto& q : j.at("constants"))
            rec.constants.push_back({q.at(0).get<std::int64_t>(), q.at(1).get<std::int64_t>(),
                                     q.at(2).get<std::int64_t>(), q.at(3).get<std::int64_t>()});
        return rec;
    } catch (const std::exception& e) {
        std::cerr << "blockfuse: corrupt cache " << target << " (" << e.what() << "), recomputing\n";
        return std::nullopt;
    }
}

// Install cached constants into a freshly built context after checking that
// the recorded class table matches the recomputed one. Returns false (and
// leaves the context untouched) on any disagreement.
inline bool apply_cache(AlgebraContext& ctx, const CacheRecord& rec) {
    const auto& classes = ctx.group().classes();
    if (rec.classes.size() != classes.size()) return false;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (rec.classes[i].rep != format_cycles(classes[i].rep)) return false;
        if (rec.classes[i].size != classes[i].size) return false;
        if (rec.classes[i].tag != split_suffix(classes[i].tag)) return false;
    }
    int d = ctx.dim();
    std::vector<std::int64_t> cube(static_cast<std::size_t>(d) * d * d, 0);
    for (const auto& q : rec.constants) {
        if (q[0] < 0 || q[0] >= d || q[1] < 0 || q[1] >= d || q[2] < 0 || q[2] >= d) return false;
        cube[(static_cast<std::size_t>(q[0]) * d + q[1]) * d + q[2]] = q[3];
    }
    ctx.install_constants(std::move(cube));
    return true;
}

}  // namespace blockfuse
