#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace aucmpc {

using u8 = std::uint8_t;
using u16 = std::uint16_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

// Bit width of the main ring. All share words on the wire are 64-bit.
inline constexpr unsigned kEll = 64;

// Raised when a peer misbehaves or a reconstructed value is structurally
// impossible (e.g. a CMP mask that is neither 0 nor K).
struct ProtocolError : std::runtime_error {
    explicit ProtocolError(const std::string& what) : std::runtime_error(what) {}
};

struct TransportError : std::runtime_error {
    explicit TransportError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aucmpc
