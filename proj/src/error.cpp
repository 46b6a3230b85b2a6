#include "qore/error.hpp"

namespace qore {

std::string_view errc_name(Errc code) {
    switch (code) {
        case Errc::entropy_unavailable: return "entropy-unavailable";
        case Errc::malformed_encapsulation_key: return "malformed-encapsulation-key";
        case Errc::length_mismatch: return "length-mismatch";
        case Errc::malformed_key: return "malformed-key";
        case Errc::context_too_long: return "context-too-long";
        case Errc::small_order_point: return "small-order-point";
        case Errc::out_len_too_large: return "out-len-too-large";
        case Errc::out_len_zero: return "out-len-zero";
        case Errc::invalid_hex: return "invalid-hex";
        case Errc::invalid_base64: return "invalid-base64";
        case Errc::auth_failure: return "auth-failure";
        case Errc::invalid_supi: return "invalid-supi";
        case Errc::malformed_public_key: return "malformed-public-key";
        case Errc::unknown_key_id: return "unknown-key-id";
        case Errc::mac_mismatch: return "mac-mismatch";
        case Errc::malformed_envelope: return "malformed-envelope";
        case Errc::truncated_input: return "truncated-input";
        case Errc::unknown_scheme_id: return "unknown-scheme-id";
        case Errc::length_overflow: return "length-field-overflow";
        case Errc::invalid_lifetime: return "invalid-lifetime";
        case Errc::unsupported_alg: return "unsupported-alg";
        case Errc::malformed_token: return "malformed-token";
        case Errc::unknown_kid: return "unknown-kid";
        case Errc::bad_signature: return "bad-signature";
        case Errc::expired: return "expired";
        case Errc::revoked: return "revoked";
        case Errc::audience_mismatch: return "audience-mismatch";
        case Errc::revocation_set_invalid: return "revocation-set-invalid";
        case Errc::not_a_ca: return "not-a-ca";
        case Errc::validity_exceeds_profile: return "validity-exceeds-profile";
        case Errc::path_length_exceeded: return "path-length-exceeded";
        case Errc::untrusted_root: return "untrusted-root";
        case Errc::signature_invalid: return "signature-invalid";
        case Errc::expired_cert: return "expired-cert";
        case Errc::revoked_cert: return "revoked-cert";
        case Errc::stale_crl: return "stale-crl";
        case Errc::broken_chain: return "broken-chain";
        case Errc::malformed_certificate: return "malformed-certificate";
        case Errc::nonce_too_short: return "nonce-too-short";
        case Errc::empty_additional_secret: return "empty-additional-secret";
        case Errc::schedule_overflow: return "schedule-overflow";
        case Errc::double_mix: return "double-mix";
        case Errc::unknown_ppk_id: return "unknown-ppk-id";
        case Errc::state_not_derived: return "state-not-derived";
        case Errc::chain_invalid: return "chain-invalid";
        case Errc::finished_mismatch: return "finished-mismatch";
        case Errc::mtls_client_cert_missing: return "mtls-client-cert-missing";
        case Errc::cipher_mismatch: return "cipher-mismatch";
        case Errc::replay: return "replay";
        case Errc::malformed_message: return "malformed-message";
        case Errc::connection_closed: return "connection-closed";
        case Errc::unregistered_consumer: return "unregistered-consumer";
        case Errc::scope_denied: return "scope-denied";
        case Errc::unknown_algorithm: return "unknown-algorithm";
        case Errc::usage: return "usage";
        case Errc::io_error: return "io-error";
    }
    return "unknown-error";
}

namespace {
std::string build_message(Errc code, const std::string& detail) {
    std::string msg(errc_name(code));
    if (!detail.empty()) {
        msg += ": ";
        msg += detail;
    }
    return msg;
}
}  // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(build_message(code, detail)), code_(code) {}

void fail(Errc code, const std::string& detail) {
    throw Error(code, detail);
}

}  // namespace qore
