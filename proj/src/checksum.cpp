#include "unimod/checksum.hpp"

#include <cstdio>

namespace unimod {

std::string to_hex(std::uint64_t value) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
    return buf;
}

}  // namespace unimod
