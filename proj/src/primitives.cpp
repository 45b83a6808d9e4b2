#include "aucmpc/primitives.hpp"

#include "aucmpc/wire.hpp"

namespace aucmpc {

std::pair<Share, Share> make_shares(const RingElement& x, PairStream& rng) {
    u64 s0 = rng.next_element(x.ring);
    RingElement e0{s0, x.ring};
    RingElement e1 = sub(x, e0);
    return {Share{e0, Role::S0}, Share{e1, Role::S1}};
}

RingElement reconstruct(const Share& s0, const Share& s1) {
    if (s0.owner == s1.owner) throw std::invalid_argument("reconstruct: shares from one owner");
    return add(s0.element, s1.element);
}

std::pair<BitFieldShares, BitFieldShares> share_bits(u64 value, unsigned ell, PairStream& rng) {
    BitFieldShares a{std::vector<u8>(ell), Role::S0};
    BitFieldShares b{std::vector<u8>(ell), Role::S1};
    for (unsigned k = 0; k < ell; ++k) {
        u8 bit = static_cast<u8>((value >> (ell - 1 - k)) & 1);
        u8 s0 = static_cast<u8>(rng.next_below(kP));
        a.shares[k] = s0;
        b.shares[k] = p_sub(bit, s0);
    }
    return {a, b};
}

std::pair<BeaverTriple, BeaverTriple> make_triple(PairStream& rng) {
    u64 a = rng.next_u64(), b = rng.next_u64();
    u64 c = a * b;  // native wrap is exactly mod L
    auto [a0, a1] = make_shares({a, RingId::L}, rng);
    auto [b0, b1] = make_shares({b, RingId::L}, rng);
    auto [c0, c1] = make_shares({c, RingId::L}, rng);
    return {BeaverTriple{a0, b0, c0}, BeaverTriple{a1, b1, c1}};
}

// --- Beaver multiplication ---------------------------------------------------

std::vector<Sec> mul_vec(Party& p, std::span<const Sec> x, std::span<const Sec> y) {
    if (x.size() != y.size()) throw std::invalid_argument("mul_vec: size mismatch");
    const size_t n = x.size();
    if (n == 0) return {};
    ScopedTag tag(p, Tag::MUL);

    if (p.is_helper()) {
        WireWriter w0, w1;
        for (size_t j = 0; j < n; ++j) {
            auto [t0, t1] = make_triple(p.priv);
            w0.u64v(t0.a.element.value);
            w0.u64v(t0.b.element.value);
            w0.u64v(t0.c.element.value);
            w1.u64v(t1.a.element.value);
            w1.u64v(t1.b.element.value);
            w1.u64v(t1.c.element.value);
        }
        auto m0 = w0.take(), m1 = w1.take();
        p.net->send(kS0, m0, /*setup=*/true);
        p.net->send(kS1, m1, /*setup=*/true);
        return std::vector<Sec>(n);
    }

    WireReader triples(std::span<const u8>{});
    auto raw = p.net->recv(kS2);
    triples = WireReader(raw);
    std::vector<u64> ta(n), tb(n), tc(n), ef(2 * n);
    for (size_t j = 0; j < n; ++j) {
        ta[j] = triples.u64v();
        tb[j] = triples.u64v();
        tc[j] = triples.u64v();
        ef[2 * j] = x[j].v - ta[j];
        ef[2 * j + 1] = y[j].v - tb[j];
    }
    WireWriter w;
    w.u64s(ef);
    p.net->send(p.peer_proxy(), w.take());
    auto peer_raw = p.net->recv(p.peer_proxy());
    p.round();
    WireReader peer(peer_raw);

    const u64 i = p.pid();
    std::vector<Sec> z(n);
    for (size_t j = 0; j < n; ++j) {
        u64 e = ef[2 * j] + peer.u64v();
        u64 f = ef[2 * j + 1] + peer.u64v();
        z[j].v = f * x[j].v + e * y[j].v + tc[j] - i * e * f;
    }
    return z;
}

Sec mul(Party& p, Sec x, Sec y) {
    return mul_vec(p, std::span(&x, 1), std::span(&y, 1))[0];
}

// --- Private compare ----------------------------------------------------------

namespace {

// Fills c[0..ell-1] (this party's Z_67 shares, MSB-first) for one instance.
void pc_instance_shares(u64 i, std::span<const u8> rb, u64 y, u8 n, unsigned ell,
                        std::span<const u8> s, std::span<const u8> u, u8* c) {
    const u64 all_ones = (ell == 64) ? ~u64(0) : ((u64(1) << ell) - 1);
    if (n == 1 && y == all_ones) {
        // r > y is impossible; emit a share pattern with exactly one zero so
        // the helper always reports 1. The masked values still look random.
        for (unsigned k = 0; k < ell; ++k) {
            u8 ck;
            if (k + 1 == ell)
                ck = (i == 0) ? u[k] : p_neg(u[k]);
            else
                ck = (i == 0) ? p_add(u[k], 1) : p_neg(u[k]);
            c[k] = p_mul(s[k], ck);
        }
        return;
    }
    // n = 0 scans for r > y directly; n = 1 scans for r < y+1, i.e. the
    // complement. Either way a zero at the first differing bit is the signal.
    const u64 g = (n == 0) ? y : y + 1;
    u8 prefix = 0;  // sum of w over more significant bits
    for (unsigned k = 0; k < ell; ++k) {
        u8 gbit = static_cast<u8>((g >> (ell - 1 - k)) & 1);
        u8 w = p_sub(p_add(rb[k], static_cast<u8>(i * gbit)),
                     p_mul(static_cast<u8>(2 * gbit), rb[k]));
        u8 ck;
        if (n == 0)
            ck = p_add(p_sub(static_cast<u8>(i * gbit), rb[k]),
                       p_add(static_cast<u8>(i), prefix));
        else
            ck = p_add(p_add(p_sub(rb[k], static_cast<u8>(i * gbit)), static_cast<u8>(i)),
                       prefix);
        c[k] = p_mul(s[k], ck);
        prefix = p_add(prefix, w);
    }
}

}  // namespace

std::vector<u8> private_compare_vec(Party& p, std::span<const u8> r_bits,
                                    std::span<const u64> y, std::span<const u8> n,
                                    unsigned ell) {
    if (!p.is_proxy()) throw std::logic_error("private_compare_vec is the proxy entry point");
    const size_t m = y.size();
    if (n.size() != m || r_bits.size() != m * ell)
        throw std::invalid_argument("private_compare_vec: size mismatch");
    for (u8 b : r_bits)
        if (b >= kP) throw std::invalid_argument("bit share out of Z_67");
    ScopedTag tag(p, Tag::PC);
    auto& cs = p.common(Tag::PC);

    const u64 i = p.pid();
    std::vector<u8> d(m * ell);
    std::vector<u8> s(ell), u(ell), masked(ell);
    for (size_t j = 0; j < m; ++j) {
        for (unsigned k = 0; k < ell; ++k) s[k] = cs.next_p_star();
        for (unsigned k = 0; k < ell; ++k) u[k] = cs.next_p_star();
        auto perm = cs.next_permutation(ell);
        pc_instance_shares(i, r_bits.subspan(j * ell, ell), y[j], n[j], ell, s, u,
                           masked.data());
        for (unsigned k = 0; k < ell; ++k) d[j * ell + k] = masked[perm[k]];
    }

    p.net->send(kS2, d);
    p.round();
    auto reply = p.net->recv(kS2);
    p.round();
    if (reply.size() != m) throw ProtocolError("private compare: bad reply size");
    return reply;
}

std::vector<u8> private_compare_helper(Party& p, size_t m, unsigned ell) {
    if (!p.is_helper()) throw std::logic_error("private_compare_helper is the helper entry point");
    ScopedTag tag(p, Tag::PC);
    auto d0 = p.net->recv(kS0);
    auto d1 = p.net->recv(kS1);
    if (d0.size() != m * ell || d1.size() != m * ell)
        throw ProtocolError("private compare: bad d vector size");

    std::vector<u8> n_prime(m), b0(m), b1(m);
    for (size_t j = 0; j < m; ++j) {
        u8 found = 0;
        for (unsigned k = 0; k < ell; ++k)
            if ((d0[j * ell + k] + d1[j * ell + k]) % kP == 0) found = 1;
        n_prime[j] = found;
        u8 mask = p.priv.next_bit();
        b0[j] = mask;
        b1[j] = found ^ mask;
    }
    p.net->send(kS0, b0);
    p.net->send(kS1, b1);
    return n_prime;
}

// --- bit reveal ----------------------------------------------------------------

bool reveal_bit(Party& p, Sec b, Tag tag) {
    ScopedTag t(p, tag);
    if (p.is_helper()) {
        auto m0 = p.net->recv(kS0);
        auto m1 = p.net->recv(kS1);
        u64 v = WireReader(m0).u64v() + WireReader(m1).u64v();
        if (v > 1) throw ProtocolError("revealed selection bit is not boolean");
        return v == 1;
    }
    WireWriter w;
    w.u64v(b.v);
    auto msg = w.take();
    p.net->send(p.peer_proxy(), msg);
    p.net->send(kS2, msg);
    auto peer = p.net->recv(p.peer_proxy());
    p.round();
    u64 v = b.v + WireReader(peer).u64v();
    if (v > 1) throw ProtocolError("revealed selection bit is not boolean");
    return v == 1;
}

}  // namespace aucmpc
