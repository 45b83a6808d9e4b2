#include "aucmpc/prng.hpp"

#include <sodium.h>

#include <stdexcept>

namespace aucmpc {

Seed random_seed() {
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    Seed s;
    randombytes_buf(s.data(), s.size());
    return s;
}

Seed parse_seed_hex(std::string_view s) {
    if (s.size() != 64) throw ConfigError("seed must be 64 hex characters");
    Seed out{};
    auto nib = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        throw ConfigError("invalid hex digit in seed");
    };
    for (size_t i = 0; i < 32; ++i)
        out[i] = static_cast<u8>(nib(s[2 * i]) * 16 + nib(s[2 * i + 1]));
    return out;
}

std::string seed_to_hex(const Seed& s) {
    static const char* digits = "0123456789abcdef";
    std::string out(64, '0');
    for (size_t i = 0; i < 32; ++i) {
        out[2 * i] = digits[s[i] >> 4];
        out[2 * i + 1] = digits[s[i] & 15];
    }
    return out;
}

PairStream::PairStream(const Seed& seed, std::string_view domain) : key_(seed) {
    if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    // Domain label becomes the ChaCha20 nonce; distinct labels give
    // independent streams under one seed.
    for (size_t i = 0; i < nonce_.size() && i < domain.size(); ++i)
        nonce_[i] = static_cast<u8>(domain[i]);
}

void PairStream::refill() {
    buf_.fill(0);
    crypto_stream_chacha20_xor_ic(buf_.data(), buf_.data(), buf_.size(), nonce_.data(),
                                  block_counter_, key_.data());
    block_counter_ += buf_.size() / 64;
    pos_ = 0;
}

u8 PairStream::next_byte() {
    if (pos_ >= buf_.size()) refill();
    return buf_[pos_++];
}

u64 PairStream::next_u64() {
    ++draw_count_;
    u64 v = 0;
    for (int i = 0; i < 8; ++i) v |= u64(next_byte()) << (8 * i);
    return v;
}

u8 PairStream::next_bit() {
    ++draw_count_;
    return next_byte() & 1;
}

u64 PairStream::next_below(u64 bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    if (bound == 1) { ++draw_count_; return 0; }
    ++draw_count_;
    // Draw just enough bytes for the bound; rejection keeps the result unbiased.
    if (bound <= 256) {
        const u16 limit = static_cast<u16>(256 - 256 % bound);
        for (;;) {
            u8 v = next_byte();
            if (v < limit) return v % bound;
        }
    }
    if (bound <= (u64(1) << 16)) {
        const u32 limit = static_cast<u32>(65536 - 65536 % bound);
        for (;;) {
            u32 v = next_byte();
            v |= u32(next_byte()) << 8;
            if (v < limit) return v % bound;
        }
    }
    const u64 limit = bound * (UINT64_MAX / bound);  // multiple of bound
    for (;;) {
        u64 v = 0;
        for (int i = 0; i < 8; ++i) v |= u64(next_byte()) << (8 * i);
        if (v < limit) return v % bound;
    }
}

u64 PairStream::next_element(RingId ring) {
    switch (ring) {
        case RingId::L: return next_u64();
        case RingId::K: return next_u64() & (kK - 1);
        case RingId::P: return next_below(kP);
    }
    throw std::invalid_argument("unknown ring");
}

std::vector<u32> PairStream::next_permutation(u32 n) {
    if (n == 0) throw std::invalid_argument("next_permutation: n must be >= 1");
    std::vector<u32> p(n);
    for (u32 i = 0; i < n; ++i) p[i] = i;
    for (u32 i = n - 1; i > 0; --i) {
        u32 j = static_cast<u32>(next_below(i + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

u64 permute_bits(std::span<const u32> perm, u64 x) {
    u64 out = 0;
    for (unsigned i = 0; i < kEll; ++i) {
        u64 bit = (x >> (kEll - 1 - perm[i])) & 1;
        out |= bit << (kEll - 1 - i);
    }
    return out;
}

}  // namespace aucmpc
