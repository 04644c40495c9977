#pragma once

#include "coxbal/rootdata.hpp"
#include "coxbal/weyl.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace coxbal {

/// On-disk copies of GroupTable, one file per diagram hash. A file is used
/// only if magic, format version, hash, shapes and the checksum of the
/// inversion-set array all match; anything else is rebuilt and overwritten.
namespace cache {

inline constexpr char kMagic[8] = {'C', 'O', 'X', 'B', 'A', 'L', 'G', '\0'};
inline constexpr std::uint32_t kFormatVersion = 1;

inline std::uint64_t checksum(const std::vector<std::uint64_t> & words)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words)
        for (int b = 0; b < 8; ++b) {
            h ^= (w >> (8 * b)) & 0xff;
            h *= 1099511628211ULL;
        }
    return h;
}

/// COXBAL_CACHE_DIR, else $XDG_CACHE_HOME/coxbal, else $HOME/.cache/coxbal.
inline std::optional<std::filesystem::path> default_directory()
{
    if (const char * d = std::getenv("COXBAL_CACHE_DIR"); d && *d)
        return std::filesystem::path(d);
    if (const char * x = std::getenv("XDG_CACHE_HOME"); x && *x)
        return std::filesystem::path(x) / "coxbal";
    if (const char * h = std::getenv("HOME"); h && *h)
        return std::filesystem::path(h) / ".cache" / "coxbal";
    return std::nullopt;
}

inline std::filesystem::path file_for(const std::filesystem::path & dir, const CoxeterDiagram & d)
{
    char name[64];
    std::snprintf(name, sizeof name, "group-%016llx.bin", static_cast<unsigned long long>(d.hash()));
    return dir / name;
}

namespace detail {

template <typename T>
void put(std::ostream & out, const T & v)
{
    out.write(reinterpret_cast<const char *>(&v), sizeof v);
}

template <typename T>
void put_array(std::ostream & out, const std::vector<T> & v)
{
    put(out, static_cast<std::uint64_t>(v.size()));
    out.write(reinterpret_cast<const char *>(v.data()), static_cast<std::streamsize>(v.size() * sizeof(T)));
}

template <typename T>
bool get(std::istream & in, T & v)
{
    return static_cast<bool>(in.read(reinterpret_cast<char *>(&v), sizeof v));
}

template <typename T>
bool get_array(std::istream & in, std::vector<T> & v, std::uint64_t expected)
{
    std::uint64_t n = 0;
    if (! get(in, n) || n != expected)
        return false;
    v.resize(n);
    return static_cast<bool>(in.read(reinterpret_cast<char *>(v.data()), static_cast<std::streamsize>(n * sizeof(T))));
}

} // namespace detail

/// Writes atomically (temporary file, then rename). Returns false on I/O failure.
inline bool save(const std::filesystem::path & dir, const GroupTable & g)
{
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    auto target = file_for(dir, g.diagram());
    auto tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (! out)
            return false;
        const auto & d = g.data();
        out.write(kMagic, sizeof kMagic);
        detail::put(out, kFormatVersion);
        detail::put(out, g.diagram().hash());
        detail::put(out, static_cast<std::uint32_t>(g.rank()));
        detail::put(out, static_cast<std::uint64_t>(d.size));
        detail::put(out, static_cast<std::uint64_t>(g.num_positive_roots()));
        detail::put_array(out, d.inversions);
        detail::put_array(out, d.lengths);
        detail::put_array(out, d.left_mul);
        detail::put_array(out, d.right_mul);
        detail::put_array(out, d.inverse);
        detail::put(out, checksum(d.inversions));
        if (! out)
            return false;
    }
    std::filesystem::rename(tmp, target, ec);
    return ! ec;
}

inline std::shared_ptr<const GroupTable> load(const std::filesystem::path & dir, const RootSystem & roots)
{
    std::ifstream in(file_for(dir, roots.diagram()), std::ios::binary);
    if (! in)
        return nullptr;
    char magic[8];
    std::uint32_t version = 0, rank = 0;
    std::uint64_t hash = 0, size = 0, nroots = 0, sum = 0;
    if (! in.read(magic, sizeof magic) || std::string(magic, 8) != std::string(kMagic, 8))
        return nullptr;
    if (! detail::get(in, version) || version != kFormatVersion)
        return nullptr;
    if (! detail::get(in, hash) || hash != roots.diagram().hash())
        return nullptr;
    if (! detail::get(in, rank) || static_cast<int>(rank) != roots.rank())
        return nullptr;
    if (! detail::get(in, size) || size != roots.diagram().group_order())
        return nullptr;
    if (! detail::get(in, nroots) || nroots != roots.num_positive())
        return nullptr;
    GroupTable::Data d;
    d.size = size;
    const std::uint64_t W = DynamicBitset::word_count(nroots);
    if (! detail::get_array(in, d.inversions, size * W) || ! detail::get_array(in, d.lengths, size)
        || ! detail::get_array(in, d.left_mul, size * rank) || ! detail::get_array(in, d.right_mul, size * rank)
        || ! detail::get_array(in, d.inverse, size))
        return nullptr;
    if (! detail::get(in, sum) || sum != checksum(d.inversions))
        return nullptr;
    return std::make_shared<const GroupTable>(roots, std::move(d));
}

} // namespace cache

struct GroupOptions {
    std::optional<std::filesystem::path> cache_dir; // nullopt: no cache
    std::uint64_t capacity = kDefaultCapacity;
};

/// Enumerates W, reading and refreshing the on-disk cache when one is configured.
inline std::shared_ptr<const GroupTable> load_or_build(const CoxeterDiagram & diagram, const GroupOptions & options = {})
{
    if (diagram.group_order() > options.capacity)
        return enumerate_group(diagram, options.capacity); // raises CapacityExceeded
    auto roots = build_root_system(diagram);
    if (options.cache_dir)
        if (auto hit = cache::load(*options.cache_dir, roots))
            return hit;
    auto g = enumerate_group(roots, options.capacity);
    if (options.cache_dir)
        cache::save(*options.cache_dir, *g);
    return g;
}

} // namespace coxbal
