#pragma once

#include <functional>
#include <memory>

#include "qore/bytes.hpp"

namespace qore {

/// Entropy abstraction behind every randomized operation. Three kinds:
///
///   system    — the OS CSPRNG.
///   seeded    — deterministic SHAKE256 stream over a 32-byte seed; equal
///               seeds yield identical byte streams, which makes every
///               protocol run replayable.
///   qrng_stub — pluggable external source (models a QRNG feed); backed by
///               a caller-supplied fill callback, or the system CSPRNG when
///               none is given.
///
/// A seeded source is a stateful stream and therefore single-owner:
/// move-only, not copyable.
class EntropySource {
public:
    enum class Kind { System, Seeded, QrngStub };

    static EntropySource system();
    static EntropySource seeded(ByteView seed32);
    static EntropySource qrng_stub(std::function<void(std::span<std::uint8_t>)> fill = {});

    EntropySource(EntropySource&&) noexcept;
    EntropySource& operator=(EntropySource&&) noexcept;
    EntropySource(const EntropySource&) = delete;
    EntropySource& operator=(const EntropySource&) = delete;
    ~EntropySource();

    void fill(std::span<std::uint8_t> out);
    Bytes bytes(std::size_t n);
    Kind kind() const;

private:
    struct Impl;
    explicit EntropySource(std::unique_ptr<Impl> impl);
    std::unique_ptr<Impl> impl_;
};

namespace detail {

/// Routes PQClean's internal randombytes() to an EntropySource for the
/// duration of a scope (thread-local; nesting restores the previous hook).
class RandomBytesGuard {
public:
    explicit RandomBytesGuard(EntropySource& src);
    explicit RandomBytesGuard(ByteView fixed);
    ~RandomBytesGuard();
    RandomBytesGuard(const RandomBytesGuard&) = delete;
    RandomBytesGuard& operator=(const RandomBytesGuard&) = delete;

private:
    void* previous_;
};

}  // namespace detail
}  // namespace qore
