#pragma once

#include <optional>
#include <string_view>

#include "qore/bytes.hpp"
#include "qore/rng.hpp"

namespace qore {

enum class SigAlg { MlDsa44, MlDsa65, MlDsa87, Ed25519 };

struct SigParamSet {
    SigAlg alg;
    std::string_view name;
    std::size_t vk_len;
    std::size_t sk_len;
    std::size_t sig_len;
};

const SigParamSet& sig_params(SigAlg alg);
std::optional<SigAlg> sig_alg_from_name(std::string_view name);

/// FIPS 204 final ML-DSA-65 signature length. Pre-standard (round-3)
/// deployments used 3293 bytes; kept as a named constant because external
/// size tables still quote it.
inline constexpr std::size_t kMlDsa65SigLen = 3309;
inline constexpr std::size_t kMlDsa65SigLenRound3 = 3293;

struct SigKeyPair {
    Bytes vk;
    Bytes sk;
};

SigKeyPair sig_keygen(SigAlg alg, EntropySource& rng);
/// Derandomized keygen (xi for ML-DSA, raw key for Ed25519) — KAT seam.
SigKeyPair sig_keygen_derand(SigAlg alg, ByteView seed32);

/// Hedged signing; context ≤ 255 bytes. Ed25519 accepts only an empty
/// context (no Ed25519ctx support).
Bytes sig_sign(SigAlg alg, ByteView sk, ByteView message, ByteView context, EntropySource& rng);
Bytes sig_sign_derand(SigAlg alg, ByteView sk, ByteView message, ByteView context, ByteView rnd32);

bool sig_verify(SigAlg alg, ByteView vk, ByteView message, ByteView sig, ByteView context);

}  // namespace qore
