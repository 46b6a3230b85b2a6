#pragma once

#include "qore/bytes.hpp"

namespace qore {

enum class HashAlg { Sha256, Sha384 };

std::size_t hash_len(HashAlg alg);

Bytes hash(HashAlg alg, ByteView data);
Bytes sha256(ByteView data);
Bytes sha384(ByteView data);

Bytes hmac(HashAlg alg, ByteView key, ByteView data);
Bytes hmac_sha256(ByteView key, ByteView data);
Bytes hmac_sha384(ByteView key, ByteView data);

/// Constant-time tag comparison.
bool hmac_verify(ByteView mac_key, ByteView data, ByteView tag);

Bytes shake256(std::size_t out_len, ByteView data);

}  // namespace qore
