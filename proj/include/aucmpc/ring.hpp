#pragma once

#include <array>
#include <span>

#include "aucmpc/common.hpp"

namespace aucmpc {

// The three rings shares live in: Z_L with L = 2^64, Z_K with K = 2^63,
// and the small prime field Z_67 used for bitwise comparison shares.
enum class RingId : u8 { L = 0, K = 1, P = 2 };

inline constexpr u64 kK = u64(1) << 63;
inline constexpr u64 kP = 67;

// Modulus as a 128-bit integer (L does not fit in 64 bits).
constexpr u128 ring_modulus(RingId r) {
    switch (r) {
        case RingId::L: return u128(1) << 64;
        case RingId::K: return u128(kK);
        case RingId::P: return u128(kP);
    }
    return 0;
}

constexpr const char* ring_name(RingId r) {
    switch (r) {
        case RingId::L: return "Z_L";
        case RingId::K: return "Z_K";
        case RingId::P: return "Z_P";
    }
    return "?";
}

// A single residue tagged with the ring it belongs to. value < modulus always.
struct RingElement {
    u64 value = 0;
    RingId ring = RingId::L;

    friend bool operator==(const RingElement&, const RingElement&) = default;
};

inline u64 reduce(u128 x, RingId r) {
    return static_cast<u64>(x % ring_modulus(r));
}

inline RingElement make_element(u64 value, RingId r) {
    return RingElement{reduce(value, r), r};
}

namespace detail {
inline void require_same_ring(const RingElement& a, const RingElement& b) {
    if (a.ring != b.ring)
        throw std::invalid_argument(std::string("ring mismatch: ") + ring_name(a.ring) +
                                    " vs " + ring_name(b.ring));
}
}  // namespace detail

inline RingElement add(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return {reduce(u128(a.value) + b.value, a.ring), a.ring};
}

inline RingElement sub(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return {reduce(ring_modulus(a.ring) + a.value - b.value, a.ring), a.ring};
}

inline RingElement mul(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return {reduce(u128(a.value) * b.value, a.ring), a.ring};
}

inline RingElement neg(const RingElement& a) {
    return {reduce(ring_modulus(a.ring) - a.value, a.ring), a.ring};
}

// 1 iff a + b wraps past the modulus when summed as plain integers.
inline int wrap_flag(const RingElement& a, const RingElement& b) {
    detail::require_same_ring(a, b);
    return (u128(a.value) + b.value >= ring_modulus(a.ring)) ? 1 : 0;
}

// Fixed-width bit string, most significant bit first: bits[0] carries 2^63.
struct BitVector {
    std::array<u8, kEll> bits{};

    u8& operator[](size_t i) { return bits[i]; }
    u8 operator[](size_t i) const { return bits[i]; }
    static constexpr size_t size() { return kEll; }

    friend bool operator==(const BitVector&, const BitVector&) = default;
};

inline BitVector bit_decompose(const RingElement& x) {
    BitVector out;
    for (unsigned i = 0; i < kEll; ++i)
        out.bits[i] = static_cast<u8>((x.value >> (kEll - 1 - i)) & 1);
    return out;
}

inline u64 bit_reassemble(const BitVector& v) {
    u64 x = 0;
    for (unsigned i = 0; i < kEll; ++i)
        x |= u64(v.bits[i] & 1) << (kEll - 1 - i);
    return x;
}

// Most significant bit of a Z_L element: 1 iff x >= 2^63.
inline int msb(const RingElement& x) {
    if (x.ring != RingId::L)
        throw std::invalid_argument("msb is defined over Z_L");
    return static_cast<int>(x.value >> 63);
}

// --- Z_67 helpers used throughout private compare ------------------------

inline u8 p_add(u8 a, u8 b) { return static_cast<u8>((u16(a) + b) % kP); }
inline u8 p_sub(u8 a, u8 b) { return static_cast<u8>((u16(a) + kP - b) % kP); }
inline u8 p_mul(u8 a, u8 b) { return static_cast<u8>((u16(a) * b) % kP); }
inline u8 p_neg(u8 a) { return static_cast<u8>((kP - a) % kP); }

}  // namespace aucmpc
