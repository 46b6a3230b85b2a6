#pragma once

#include <array>

#include "qore/bytes.hpp"
#include "qore/rng.hpp"

namespace qore {

constexpr std::size_t kX25519KeyLen = 32;

struct DhKeyPair {
    std::array<std::uint8_t, kX25519KeyLen> sk{};
    std::array<std::uint8_t, kX25519KeyLen> pk{};
};

DhKeyPair dh_keygen(EntropySource& rng);
DhKeyPair dh_from_private(ByteView sk32);

/// X25519. Throws Errc::small_order_point when the shared secret is all
/// zero (peer supplied a small-order point).
std::array<std::uint8_t, 32> dh_agree(ByteView sk32, ByteView peer_pk32);

}  // namespace qore
