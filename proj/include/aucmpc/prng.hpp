#pragma once

#include <array>
#include <cstring>
#include <string_view>
#include <vector>

#include "aucmpc/common.hpp"
#include "aucmpc/ring.hpp"

namespace aucmpc {

using Seed = std::array<u8, 32>;

Seed random_seed();                       // from the OS entropy pool
Seed parse_seed_hex(std::string_view s);  // 64 hex chars
std::string seed_to_hex(const Seed& s);

// Deterministic byte stream: ChaCha20 keyed by a 32-byte seed, domain-separated
// by an 8-byte label. Two parties constructed from the same (seed, domain)
// draw identical sequences; that is the whole contract the protocols rely on.
class PairStream {
public:
    PairStream(const Seed& seed, std::string_view domain);

    u64 next_u64();
    u8 next_bit();

    // Uniform in [0, bound). Rejection sampling, so no modulo bias.
    u64 next_below(u64 bound);

    // Uniform element of the given ring (full range).
    u64 next_element(RingId ring);

    // Uniform nonzero element of Z_67.
    u8 next_p_star() { return static_cast<u8>(1 + next_below(kP - 1)); }

    // Uniform permutation of {0..n-1}; out[i] is the source index of slot i.
    std::vector<u32> next_permutation(u32 n);

    u64 draws() const { return draw_count_; }

private:
    void refill();
    u8 next_byte();

    Seed key_;
    std::array<u8, 8> nonce_{};
    u64 block_counter_ = 0;
    std::array<u8, 1024> buf_{};
    size_t pos_ = sizeof(buf_);
    u64 draw_count_ = 0;
};

// Applies a permutation as produced by next_permutation: out[i] = in[perm[i]].
template <typename T>
std::vector<T> apply_permutation(std::span<const u32> perm, std::span<const T> in) {
    std::vector<T> out(in.size());
    for (size_t i = 0; i < in.size(); ++i) out[i] = in[perm[i]];
    return out;
}

inline std::vector<u32> invert_permutation(std::span<const u32> perm) {
    std::vector<u32> inv(perm.size());
    for (u32 i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
    return inv;
}

// Permutes the 64 bit positions of a word: bit i of the result is bit perm[i]
// of the input (same MSB-first indexing as BitVector).
u64 permute_bits(std::span<const u32> perm, u64 x);

}  // namespace aucmpc
