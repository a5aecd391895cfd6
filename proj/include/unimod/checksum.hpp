#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace unimod {

/// 64-bit FNV-1a.
[[nodiscard]] constexpr std::uint64_t fnv1a64(std::string_view data) noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

[[nodiscard]] std::string to_hex(std::uint64_t value);

}  // namespace unimod
