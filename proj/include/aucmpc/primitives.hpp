#pragma once

#include <utility>
#include <vector>

#include "aucmpc/party.hpp"
#include "aucmpc/ring.hpp"

namespace aucmpc {

// One party's additive share of a ring value.
struct Share {
    RingElement element;
    Role owner = Role::S0;
};

// Uniform split of x into two shares that reconstruct to x.
std::pair<Share, Share> make_shares(const RingElement& x, PairStream& rng);

RingElement reconstruct(const Share& s0, const Share& s1);

// 64 Z_67 shares, one per bit of a value, MSB first. Input form of private
// compare.
struct BitFieldShares {
    std::vector<u8> shares;  // length = bit count, each < 67
    Role owner = Role::S0;
};

std::pair<BitFieldShares, BitFieldShares> share_bits(u64 value, unsigned ell, PairStream& rng);

struct BeaverTriple {
    Share a, b, c;  // c reconstructs to a*b mod L
};

// Helper-generated triple over Z_L; the pair element i goes to proxy i.
std::pair<BeaverTriple, BeaverTriple> make_triple(PairStream& rng);

// A party-local word of an additively shared Z_L value. The helper carries
// zero-valued tokens so the same orchestration code runs on all three roles.
struct Sec {
    u64 v = 0;
};

// --- local share arithmetic (no communication) ------------------------------

inline Sec sec_add(const Party& p, Sec a, Sec b) {
    return p.role == Role::S2 ? Sec{} : Sec{a.v + b.v};
}
inline Sec sec_sub(const Party& p, Sec a, Sec b) {
    return p.role == Role::S2 ? Sec{} : Sec{a.v - b.v};
}
inline Sec sec_neg(const Party& p, Sec a) {
    return p.role == Role::S2 ? Sec{} : Sec{0 - a.v};
}
// x + c for public c: only S1 offsets its share.
inline Sec sec_add_pub(const Party& p, Sec a, u64 c) {
    if (p.role == Role::S1) a.v += c;
    return p.role == Role::S2 ? Sec{} : a;
}
inline Sec sec_mul_pub(const Party& p, Sec a, u64 c) {
    return p.role == Role::S2 ? Sec{} : Sec{a.v * c};
}
// Share of a public constant.
inline Sec sec_from_pub(const Party& p, u64 c) {
    return p.role == Role::S1 ? Sec{c} : Sec{};
}

// --- interactive primitives --------------------------------------------------

// Beaver multiplication, z = x*y over Z_L. The helper deals one fresh triple
// per element; proxies do one exchange round. All three roles must call.
std::vector<Sec> mul_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y);
Sec mul(Party& p, Sec x, Sec y);

// Private compare: proxies hold Z_67 shares of the bits of r (ell bits,
// MSB first, r_bits laid out instance-major), a public y and a common bit n
// per instance; the helper learns n' = n XOR (r > y) and returns fresh
// boolean shares of it to the proxies.
//
// Proxies get their boolean share per instance; the helper's return value is
// the n' it saw (useful to tests, ignored by protocols).
std::vector<u8> private_compare_vec(Party& p, std::span<const u8> r_bits,
                                    std::span<const u64> y, std::span<const u8> n,
                                    unsigned ell);
std::vector<u8> private_compare_helper(Party& p, size_t m, unsigned ell);

// Reveals a shared bit to all three parties: each proxy sends its share to
// the peer proxy and to the helper in one wave, everyone reconstructs. The
// helper needs the bit to follow the public control flow of the merge.
bool reveal_bit(Party& p, Sec b, Tag tag);

}  // namespace aucmpc
