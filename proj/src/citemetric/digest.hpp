#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace citemetric {

// FNV-1a, 64 bit. Used for input provenance digests in reports; not a
// cryptographic hash.
inline std::uint64_t fnv1a64(const void* data, std::size_t len) noexcept {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::uint64_t fnv1a64(std::string_view text) noexcept {
    return fnv1a64(text.data(), text.size());
}

inline std::string digest_hex(std::uint64_t h) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xF];
        h >>= 4;
    }
    return out;
}

} // namespace citemetric
