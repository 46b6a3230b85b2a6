#include "qore/bytes.hpp"

#include <openssl/crypto.h>

#include <atomic>

#include "qore/error.hpp"

namespace qore {

namespace {
constexpr char kHexDigits[] = "0123456789abcdef";
constexpr char kB64Alphabet[] = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";

int hex_nibble(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

int b64_value(char c) {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '-') return 62;
    if (c == '_') return 63;
    return -1;
}

std::atomic<std::uint64_t> g_wipe_count{0};
}  // namespace

std::string to_hex(ByteView data) {
    std::string out;
    out.reserve(data.size() * 2);
    for (std::uint8_t b : data) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0F]);
    }
    return out;
}

Bytes from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) fail(Errc::invalid_hex, "odd-length hex string");
    Bytes out(hex.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) {
        int hi = hex_nibble(hex[2 * i]);
        int lo = hex_nibble(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) fail(Errc::invalid_hex, "non-hex character");
        out[i] = static_cast<std::uint8_t>((hi << 4) | lo);
    }
    return out;
}

std::string b64url_encode(ByteView data) {
    std::string out;
    out.reserve((data.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= data.size()) {
        std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8) | data[i + 2];
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out.push_back(kB64Alphabet[v & 63]);
        i += 3;
    }
    std::size_t rem = data.size() - i;
    if (rem == 1) {
        std::uint32_t v = data[i] << 16;
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
    } else if (rem == 2) {
        std::uint32_t v = (data[i] << 16) | (data[i + 1] << 8);
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
    }
    return out;
}

Bytes b64url_decode(std::string_view text) {
    std::size_t rem = text.size() % 4;
    if (rem == 1) fail(Errc::invalid_base64, "invalid base64url length");
    Bytes out;
    out.reserve(text.size() / 4 * 3 + 2);
    std::size_t i = 0;
    while (i + 4 <= text.size()) {
        int a = b64_value(text[i]), b = b64_value(text[i + 1]);
        int c = b64_value(text[i + 2]), d = b64_value(text[i + 3]);
        if (a < 0 || b < 0 || c < 0 || d < 0) fail(Errc::invalid_base64, "non-alphabet character");
        std::uint32_t v = (a << 18) | (b << 12) | (c << 6) | d;
        out.push_back(static_cast<std::uint8_t>(v >> 16));
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v));
        i += 4;
    }
    if (rem == 2) {
        int a = b64_value(text[i]), b = b64_value(text[i + 1]);
        if (a < 0 || b < 0) fail(Errc::invalid_base64, "non-alphabet character");
        // Final quantum carries 8 bits; the low 4 bits of the last
        // character must be zero or the encoding is not canonical.
        if (b & 0x0F) fail(Errc::invalid_base64, "non-canonical trailing bits");
        out.push_back(static_cast<std::uint8_t>((a << 2) | (b >> 4)));
    } else if (rem == 3) {
        int a = b64_value(text[i]), b = b64_value(text[i + 1]), c = b64_value(text[i + 2]);
        if (a < 0 || b < 0 || c < 0) fail(Errc::invalid_base64, "non-alphabet character");
        if (c & 0x03) fail(Errc::invalid_base64, "non-canonical trailing bits");
        std::uint32_t v = (a << 10) | (b << 4) | (c >> 2);
        out.push_back(static_cast<std::uint8_t>(v >> 8));
        out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

bool ct_equal(ByteView a, ByteView b) {
    if (a.size() != b.size()) return false;
    return CRYPTO_memcmp(a.data(), b.data(), a.size()) == 0;
}

void secure_wipe(std::span<std::uint8_t> data) {
    if (!data.empty()) OPENSSL_cleanse(data.data(), data.size());
}

std::uint64_t wipe_count() {
    return g_wipe_count.load(std::memory_order_relaxed);
}

namespace detail {
void note_wipe() {
    g_wipe_count.fetch_add(1, std::memory_order_relaxed);
}
}  // namespace detail

Bytes cat(std::initializer_list<ByteView> parts) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    Bytes out;
    out.reserve(total);
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

void append(Bytes& out, ByteView more) {
    out.insert(out.end(), more.begin(), more.end());
}

void put_u16be(Bytes& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u24be(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

void put_u32be(Bytes& out, std::uint32_t v) {
    put_u16be(out, static_cast<std::uint16_t>(v >> 16));
    put_u16be(out, static_cast<std::uint16_t>(v));
}

void put_u64be(Bytes& out, std::uint64_t v) {
    put_u32be(out, static_cast<std::uint32_t>(v >> 32));
    put_u32be(out, static_cast<std::uint32_t>(v));
}

std::uint16_t read_u16be(ByteView in, std::size_t off) {
    if (off + 2 > in.size()) fail(Errc::truncated_input);
    return static_cast<std::uint16_t>((in[off] << 8) | in[off + 1]);
}

std::uint32_t read_u24be(ByteView in, std::size_t off) {
    if (off + 3 > in.size()) fail(Errc::truncated_input);
    return (static_cast<std::uint32_t>(in[off]) << 16) | (in[off + 1] << 8) | in[off + 2];
}

std::uint32_t read_u32be(ByteView in, std::size_t off) {
    if (off + 4 > in.size()) fail(Errc::truncated_input);
    return (static_cast<std::uint32_t>(read_u16be(in, off)) << 16) | read_u16be(in, off + 2);
}

std::uint64_t read_u64be(ByteView in, std::size_t off) {
    if (off + 8 > in.size()) fail(Errc::truncated_input);
    return (static_cast<std::uint64_t>(read_u32be(in, off)) << 32) | read_u32be(in, off + 4);
}

}  // namespace qore
