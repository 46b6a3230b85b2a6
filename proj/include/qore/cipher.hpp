#pragma once

#include <array>

#include "qore/bytes.hpp"

namespace qore {

/// AES-256-CTR keystream application; encryption and decryption are the
/// same operation. icb is the 16-byte initial counter block.
Bytes ctr_encrypt(ByteView key32, ByteView icb16, ByteView data);

/// Number of ctr_encrypt invocations so far (instrumentation seam used to
/// prove MAC-before-decrypt ordering).
std::uint64_t ctr_invocation_count();

enum class AeadAlg { Aes256Gcm, Aes128Gcm, ChaCha20Poly1305 };

std::size_t aead_key_len(AeadAlg alg);
constexpr std::size_t kAeadNonceLen = 12;
constexpr std::size_t kAeadTagLen = 16;

/// Returns ciphertext || 16-byte tag.
Bytes aead_seal(AeadAlg alg, ByteView key, ByteView nonce12, ByteView aad, ByteView plaintext);
/// Throws Errc::auth_failure on tag mismatch.
Bytes aead_open(AeadAlg alg, ByteView key, ByteView nonce12, ByteView aad, ByteView ct_and_tag);

/// The 80-byte enc/icb/mac bundle produced by the X9.63 KDF split.
/// Wiped on destruction; each wipe is observable through wipe_count().
struct SymmetricKeyMaterial {
    std::array<std::uint8_t, 32> enc_key{};
    std::array<std::uint8_t, 16> iv_or_icb{};
    std::array<std::uint8_t, 32> mac_key{};

    static SymmetricKeyMaterial from_okm(ByteView okm80);

    SymmetricKeyMaterial() = default;
    SymmetricKeyMaterial(SymmetricKeyMaterial&& other) noexcept;
    SymmetricKeyMaterial& operator=(SymmetricKeyMaterial&& other) noexcept;
    SymmetricKeyMaterial(const SymmetricKeyMaterial&) = delete;
    SymmetricKeyMaterial& operator=(const SymmetricKeyMaterial&) = delete;
    ~SymmetricKeyMaterial();
};

}  // namespace qore
