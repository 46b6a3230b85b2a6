#pragma once

#include "qore/bytes.hpp"
#include "qore/hash.hpp"

namespace qore {

// RFC 5869 extract-then-expand. The plain hkdf() entry point is HKDF-SHA-256;
// the alg-parameterized forms serve hash-agile callers (handshake suites).
Bytes hkdf_extract(HashAlg alg, ByteView salt, ByteView ikm);
Bytes hkdf_expand(HashAlg alg, ByteView prk, ByteView info, std::size_t out_len);
Bytes hkdf(ByteView salt, ByteView ikm, ByteView info, std::size_t out_len);
Bytes hkdf(HashAlg alg, ByteView salt, ByteView ikm, ByteView info, std::size_t out_len);

/// ANSI X9.63 KDF over SHA-256:
/// okm = SHA-256(ss || counter_be32 || shared_info) for counter = 1..n, truncated.
Bytes x963_kdf(ByteView shared_secret, ByteView shared_info, std::size_t out_len);

}  // namespace qore
