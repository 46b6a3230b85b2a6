#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qore {

enum class Errc {
    // crypto suite
    entropy_unavailable,
    malformed_encapsulation_key,
    length_mismatch,
    malformed_key,
    context_too_long,
    small_order_point,
    out_len_too_large,
    out_len_zero,
    invalid_hex,
    invalid_base64,
    auth_failure,
    // suci
    invalid_supi,
    malformed_public_key,
    unknown_key_id,
    mac_mismatch,
    malformed_envelope,
    truncated_input,
    unknown_scheme_id,
    length_overflow,
    // token
    invalid_lifetime,
    unsupported_alg,
    malformed_token,
    unknown_kid,
    bad_signature,
    expired,
    revoked,
    audience_mismatch,
    revocation_set_invalid,
    // pki
    not_a_ca,
    validity_exceeds_profile,
    path_length_exceeded,
    untrusted_root,
    signature_invalid,
    expired_cert,
    revoked_cert,
    stale_crl,
    broken_chain,
    malformed_certificate,
    // ike
    nonce_too_short,
    empty_additional_secret,
    schedule_overflow,
    double_mix,
    unknown_ppk_id,
    state_not_derived,
    // handshake
    chain_invalid,
    finished_mismatch,
    mtls_client_cert_missing,
    cipher_mismatch,
    replay,
    malformed_message,
    connection_closed,
    // sba
    unregistered_consumer,
    scope_denied,
    // bench / cli
    unknown_algorithm,
    usage,
    io_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
public:
    explicit Error(Errc code, const std::string& detail = "");
    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = "");

}  // namespace qore
