#include "unimod/cache.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "unimod/checksum.hpp"
#include "unimod/errors.hpp"

namespace unimod {

namespace fs = std::filesystem;

namespace {

void write_atomically(const fs::path& target, const std::string& content) {
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cache: cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw Error("cache: write failed for " + tmp.string());
    }
    fs::rename(tmp, target);
}

std::optional<std::string> slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

CoefficientCache::CoefficientCache(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(dir_); }

fs::path CoefficientCache::entry_path(const ProductSpec& spec) const { return dir_ / (family_key(spec) + ".csv"); }

fs::path CoefficientCache::checksum_path(const ProductSpec& spec) const {
    return dir_ / (family_key(spec) + ".csv.fnv1a");
}

void CoefficientCache::store(const ProductSpec& spec, const Polynomial& p) const {
    std::ostringstream dump;
    write_coefficients(dump, p);
    const std::string body = std::move(dump).str();
    write_atomically(entry_path(spec), body);
    write_atomically(checksum_path(spec), to_hex(fnv1a64(body)) + "\n");
}

std::optional<Polynomial> CoefficientCache::load(const ProductSpec& spec) const {
    const fs::path entry = entry_path(spec);
    if (!fs::exists(entry)) return std::nullopt;
    const auto body = slurp(entry);
    if (!body) return std::nullopt;
    const auto sum = slurp(checksum_path(spec));
    if (!sum) throw CacheCorrupt("cache: missing checksum for " + entry.string());
    if (trim(*sum) != to_hex(fnv1a64(*body))) throw CacheCorrupt("cache: checksum mismatch for " + entry.string());
    std::istringstream in(*body);
    try {
        return read_coefficients(in);
    } catch (const FormatError& e) {
        throw CacheCorrupt("cache: unreadable entry " + entry.string() + ": " + e.what());
    }
}

}  // namespace unimod
