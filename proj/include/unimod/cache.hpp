#pragma once

// On-disk coefficient cache: <dir>/<family_key>.csv in the coefficient dump
// format, plus <family_key>.csv.fnv1a holding the FNV-1a hash of the dump.

#include <filesystem>
#include <optional>

#include "unimod/polynomial.hpp"
#include "unimod/product.hpp"

namespace unimod {

/// Name of the environment variable that supplies a cache directory when
/// none is given on the command line.
inline constexpr const char* cache_dir_env = "UNIMOD_CACHE_DIR";

class CoefficientCache {
public:
    /// Creates the directory if needed.
    explicit CoefficientCache(std::filesystem::path dir);

    [[nodiscard]] const std::filesystem::path& dir() const noexcept { return dir_; }

    /// Writes the dump and its checksum, each through a temporary file that
    /// is renamed into place.
    void store(const ProductSpec& spec, const Polynomial& p) const;

    /// Absent when no entry exists. Throws CacheCorrupt when the checksum is
    /// missing or does not match, or the dump does not parse.
    [[nodiscard]] std::optional<Polynomial> load(const ProductSpec& spec) const;

    [[nodiscard]] std::filesystem::path entry_path(const ProductSpec& spec) const;
    [[nodiscard]] std::filesystem::path checksum_path(const ProductSpec& spec) const;

private:
    std::filesystem::path dir_;
};

}  // namespace unimod
