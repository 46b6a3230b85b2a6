#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qore {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

inline Bytes to_bytes(std::string_view s) {
    return Bytes(s.begin(), s.end());
}

inline std::string to_string(ByteView b) {
    return std::string(b.begin(), b.end());
}

inline ByteView view(const Bytes& b) {
    return ByteView(b.data(), b.size());
}

std::string to_hex(ByteView data);
Bytes from_hex(std::string_view hex);

/// Base64url without padding (RFC 4648 §5). Decoding is strict: rejects
/// padding, non-alphabet characters, and non-canonical trailing bits.
std::string b64url_encode(ByteView data);
Bytes b64url_decode(std::string_view text);

/// Constant-time equality; false for differing lengths.
bool ct_equal(ByteView a, ByteView b);

void secure_wipe(std::span<std::uint8_t> data);

/// Count of key-material objects wiped so far (test seam for the
/// zeroize-on-release contract).
std::uint64_t wipe_count();
namespace detail {
void note_wipe();
}

Bytes cat(std::initializer_list<ByteView> parts);
void append(Bytes& out, ByteView more);

void put_u16be(Bytes& out, std::uint16_t v);
void put_u24be(Bytes& out, std::uint32_t v);
void put_u32be(Bytes& out, std::uint32_t v);
void put_u64be(Bytes& out, std::uint64_t v);
std::uint16_t read_u16be(ByteView in, std::size_t off);
std::uint32_t read_u24be(ByteView in, std::size_t off);
std::uint32_t read_u32be(ByteView in, std::size_t off);
std::uint64_t read_u64be(ByteView in, std::size_t off);

}  // namespace qore
