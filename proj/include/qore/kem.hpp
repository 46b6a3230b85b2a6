#pragma once

#include <optional>
#include <string_view>

#include "qore/bytes.hpp"
#include "qore/rng.hpp"

namespace qore {

enum class KemAlg { MlKem512, MlKem768, MlKem1024 };

struct KemParamSet {
    KemAlg alg;
    std::string_view name;
    std::size_t ek_len;
    std::size_t dk_len;
    std::size_t ct_len;
    std::size_t ss_len;  // 32 for every parameter set
};

const KemParamSet& kem_params(KemAlg alg);
std::optional<KemAlg> kem_alg_from_name(std::string_view name);

struct KemKeyPair {
    Bytes ek;
    Bytes dk;
};

struct KemEncapsResult {
    Bytes ct;
    Bytes ss;  // 32 bytes
};

KemKeyPair kem_keygen(KemAlg alg, EntropySource& rng);
/// Derandomized keygen from the (d, z) coin pair — KAT and test seam.
KemKeyPair kem_keygen_derand(KemAlg alg, ByteView d32, ByteView z32);

/// Throws Errc::malformed_encapsulation_key if ek fails the length or
/// modulus encoding check.
KemEncapsResult kem_encaps(KemAlg alg, ByteView ek, EntropySource& rng);
KemEncapsResult kem_encaps_derand(KemAlg alg, ByteView ek, ByteView m32);

/// Implicit rejection: always returns 32 bytes for well-formed lengths;
/// a mismatched ciphertext yields a pseudorandom secret, never an error.
Bytes kem_decaps(KemAlg alg, ByteView dk, ByteView ct);

/// FIPS 203 encapsulation-key check: every 12-bit coefficient < q.
bool kem_ek_valid(KemAlg alg, ByteView ek);

}  // namespace qore
